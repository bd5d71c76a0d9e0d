// GOULD: polynomial identities evaluated at powers of the golden ratio and
// differentiated in x (first group) or b (second group).

#include "catalog/catalog.hpp"

namespace fibharm::catalog {

namespace {

const char* const kFamily = "GOULD";

ParamSpec n_nonneg() { return p_int("n", ">= 0", n_range(0)); }
ParamSpec t_any() { return p_int("t", "in Z", int_range(-2, 2)); }

Sampler poly_samples() { return rationals({{-2, 1}, {-1, 2}, {1, 3}, {1, 1}, {2, 1}}); }

// x in {n, n+1, n+2} and a few half-integers; integer x meets H at a negative
// integer as soon as k > x or n - x - k < 0, so those points mostly skip.
ParamSpec x_halfint(bool include_zero) {
    return p_half("x", "in Z/2", [include_zero](const Assignment& p, const SampleContext&) {
        const Int n = p.i("n");
        std::vector<ParamValue> v;
        if (include_zero) v.emplace_back(HalfInt(0));
        for (Int d = 0; d <= 2; ++d) v.emplace_back(HalfInt(n + d));
        for (Int tw : {Int{-1}, Int{1}, 2 * n + 1}) v.emplace_back(half(tw));
        return v;
    });
}

ParamSpec b_param() {
    return p_half("b", "in Z/2, not a negative integer", [](const Assignment& p, const SampleContext&) {
        const Int n = p.i("n");
        return std::vector<ParamValue>{HalfInt(n),       HalfInt(n + 1),    HalfInt(n + 2), half(2 * n - 1),
                                       half(2 * n + 1), half(-1), half(1)};
    });
}

// C(x, k) (H_x - H_{x-k})
LogValue dCx(const Rational& x, Int k) { return (H(x) - H(x - R(k))) * LogValue(C(x, R(k))); }

// C(n-b, k-b) H_{k-b}
LogValue left_b(Int n, const Rational& b, Int k) { return H(R(k) - b) * LogValue(C(R(n) - b, R(k) - b)); }

// C(b, n-k) (H_b + H_{n-b} - H_{b-n+k})
LogValue right_b(Int n, const Rational& b, Int k) {
    return (H(b) + H(R(n) - b) - H(b - R(n - k))) * LogValue(C(b, R(n - k)));
}

}  // namespace

std::vector<IdentityEntry> gould_entries() {
    std::vector<IdentityEntry> v;

    v.push_back(make(
        "gould-base", kFamily, R"a("(1 + y)^{n - k} y^k")a",
        {n_nonneg(), p_rat("x", "rational", poly_samples()), p_rat("y", "rational", poly_samples())}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            const Rational x = a.q("x"), y = a.q("y");
            return sum(0, n, [&](Int k) { return C(x, R(k)) * pw(y, k); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const Rational x = a.q("x"), y = a.q("y");
            return sum(0, n, [&](Int k) { return sgn(k) * C(R(n) - x, R(k)) * pw(y + 1, n - k) * pw(y, k); });
        }));

    v.push_back(make(
        "gould-G", kFamily, R"a("G_{2n-k+t}")a", {n_nonneg(), x_halfint(true), t_any(), p_seed()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t");
            const Rational x = a.q("x");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return C(x, R(k)) * G(g, k + t); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t");
            const Rational x = a.q("x");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return sgn(k) * C(R(n) - x, R(k)) * G(g, 2 * n - k + t); });
        }));

    v.push_back(make(
        "gould-H", kFamily, R"a("(H_x-H_{x-k})G_{k+t}")a", {n_nonneg(), x_halfint(false), t_any(), p_seed()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t");
            const Rational x = a.q("x");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return dCx(x, k) * LogValue(G(g, k + t)); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t");
            const Rational y = R(n) - a.q("x");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return dCx(y, k) * LogValue(sgn(k) * G(g, 2 * n - k + t)); });
        }));

    v.push_back(make(
        "gould-O", kFamily, R"a("O_{n+1}-O_{n-k}")a", {n_nonneg(), t_any(), p_seed()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return sgn(k) / pw(4, k) * O(k + 1) * G(g, k + t); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t");
            const auto& g = a.seed();
            return LogValue(R(2 * n + 1)) * sum(0, n, [&](Int k) {
                       return sgn(k + 1) * C(2 * k, k) / (pw(2, 2 * k + 1) * C(n, k)) * (O(n + 1) - O(n - k)) *
                              G(g, 2 * n - k + t);
                   });
        }));

    v.push_back(make(
        "gould-cube", kFamily, R"a("G_{k+t}(G_{2k+t}-(-1)^k)")a", {n_nonneg(), x_halfint(false), t_any(), p_seed()},
        nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t");
            const Rational x = a.q("x");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return dCx(x, k) * LogValue(G(g, k + t) * (G(g, 2 * k + t) - sgn(k))); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t");
            const Rational y = R(n) - a.q("x");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return dCx(y, k) * LogValue(sgn(k) * pw(2, n - k) * G(g, 2 * n + k + t)); });
        }));

    v.push_back(make(
        "gould2-base", kFamily, R"a(gldge7l: "H_b + H_{n - b} - H_{b - n + k}")a",
        {n_nonneg(), b_param(), p_rat("x", "rational", poly_samples())}, not_negative_integer("b"),
        [](const Assignment& a) {
            const Int n = a.i("n");
            const Rational b = a.q("b"), x = a.q("x");
            return sum(0, n, [&](Int k) { return left_b(n, b, k) * LogValue(sgn(n - k) * pw(x + 1, k)); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const Rational b = a.q("b"), x = a.q("x");
            return sum(0, n, [&](Int k) { return right_b(n, b, k) * LogValue(pw(x, k)); });
        }));

    v.push_back(make(
        "gould2-F", kFamily, R"a(today55: "H_{k-b} F_{2k}")a", {n_nonneg(), b_param()}, not_negative_integer("b"),
        [](const Assignment& a) {
            const Int n = a.i("n");
            const Rational b = a.q("b");
            return sum(0, n, [&](Int k) { return left_b(n, b, k) * LogValue(sgn(n - k) * F(2 * k)); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const Rational b = a.q("b");
            return sum(0, n, [&](Int k) { return right_b(n, b, k) * LogValue(F(k)); });
        }));

    v.push_back(make(
        "gould2-G", kFamily, R"a(today55: "H_{k-b} G_{2k+t}")a", {n_nonneg(), b_param(), t_any(), p_seed()},
        not_negative_integer("b"),
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t");
            const Rational b = a.q("b");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return left_b(n, b, k) * LogValue(sgn(n - k) * G(g, 2 * k + t)); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t");
            const Rational b = a.q("b");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return right_b(n, b, k) * LogValue(G(g, k + t)); });
        }));

    v.push_back(make(
        "gould2-alt", kFamily, R"a(today56: "H_{k-b} G_{k+t}")a", {n_nonneg(), b_param(), t_any(), p_seed()},
        not_negative_integer("b"),
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t");
            const Rational b = a.q("b");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return left_b(n, b, k) * LogValue(sgn(n - k) * G(g, k + t)); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t");
            const Rational b = a.q("b");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return right_b(n, b, k) * LogValue(sgn(k) * G(g, k + t)); });
        }));

    v.push_back(make(
        "gould2-3t", kFamily, R"a(today57: "2^k \binom{n-b}{k-b}")a", {n_nonneg(), b_param(), t_any(), p_seed()},
        not_negative_integer("b"),
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t");
            const Rational b = a.q("b");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) {
                return left_b(n, b, k) * LogValue(sgn(n - k) * pw(2, k) * G(g, 2 * k + t));
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t");
            const Rational b = a.q("b");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return right_b(n, b, k) * LogValue(G(g, 3 * k + t)); });
        }));

    v.push_back(make(
        "gould2-3t-alt", kFamily, R"a(today58: "(-1)^{n-k+1} 2^k")a", {n_nonneg(), b_param(), t_any(), p_seed()},
        not_negative_integer("b"),
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t");
            const Rational b = a.q("b");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) {
                return left_b(n, b, k) * LogValue(sgn(n - k + 1) * pw(2, k) * G(g, k + t));
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t");
            const Rational b = a.q("b");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return right_b(n, b, k) * LogValue(sgn(k) * G(g, 3 * k + t)); });
        }));

    return v;
}

}  // namespace fibharm::catalog
