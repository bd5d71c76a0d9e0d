// ABEL-COMB: partial summation against the Pascal recurrence, then Binet.

#include "catalog/catalog.hpp"

namespace fibharm::catalog {

namespace {

const char* const kFamily = "ABEL-COMB";

// r in {n+s+1, n+s+2, n+s+3} plus half-integers; integer r below n+s+1 would
// put a harmonic argument at a negative integer.
ParamSpec r_upper() {
    return p_half("r", "integer >= n+s+1 or half-integer", [](const Assignment& p, const SampleContext&) {
        const Int base = p.i("n") + p.i("s");
        return std::vector<ParamValue>{HalfInt(base + 1), HalfInt(base + 2), HalfInt(base + 3),
                                       half(-1),          half(1),           half(2 * base + 1)};
    });
}

Constraint r_upper_ok() {
    return all_of({at_least("s", 0), [](const Assignment& a) -> std::optional<std::string> {
                       const HalfInt r = a.h("r");
                       if (r.is_integer() && r.to_integer() < a.i("n") + a.i("s") + 1) {
                           return "integer r must be >= n+s+1";
                       }
                       return std::nullopt;
                   }});
}

std::vector<ParamSpec> comb_params() {
    return {p_int("n", ">= 1", n_range(1)), p_int("s", ">= 0", int_range(0, 3)), p_int("t", ">= 0", int_range(0, 3)),
            r_upper(), p_seed()};
}

// C(r, j) (H_r - H_{r-j}), the r-derivative of C(r, j) over C(r, j).
LogValue dC(const Rational& r, Int j) { return (H(r) - H(r - R(j))) * LogValue(C(r, R(j))); }

}  // namespace

std::vector<IdentityEntry> abel_comb_entries() {
    std::vector<IdentityEntry> v;

    v.push_back(make(
        "comb-O-F", kFamily, R"a(lt63xqk: "(2k + 1)(O_{k + 1} - 1)F_{k + 1}")a", {p_int("n", ">= 1", n_range(1))},
        nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(1, n, [&](Int k) { return sgn(k - 1) * C(2 * k, k) / pw(4, k) * O(k) * F(k - 1); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(1, n, [&](Int k) {
                       return sgn(k - 1) * C(2 * k, k) / pw(4, k) * R(2 * k + 1) * (O(k + 1) - 1) * F(k + 1);
                   }) +
                   LogValue(sgn(n) * C(2 * n, n) / pw(4, n) * R(2 * n + 1) * (O(n + 1) - 1) * F(n));
        }));

    v.push_back(make(
        "comb-H-G", kFamily, R"a(zmuo9et: "H_{r - 1} - H_{r - s - 1}")a", comb_params(), r_upper_ok(),
        [](const Assignment& a) {
            const Int n = a.i("n"), s = a.i("s"), t = a.i("t");
            const Rational r = a.q("r");
            const auto& g = a.seed();
            return sum(1, n, [&](Int k) { return dC(r, k + s) * LogValue(G(g, k + t)); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), s = a.i("s"), t = a.i("t");
            const Rational r1 = a.q("r") - 1;
            const auto& g = a.seed();
            return sum(1, n, [&](Int k) { return dC(r1, k + s) * LogValue(G(g, k + t + 2)); }) +
                   dC(r1, s) * LogValue(G(g, t + 1)) - dC(r1, n + s) * LogValue(G(g, n + t + 1));
        }));

    v.push_back(make(
        "comb-H-G-base", kFamily, R"a(p517m2v: "\binom{r - 1}{s}G_{t + 1}")a", comb_params(), r_upper_ok(),
        [](const Assignment& a) {
            const Int n = a.i("n"), s = a.i("s"), t = a.i("t");
            const Rational r = a.q("r");
            const auto& g = a.seed();
            return sum(1, n, [&](Int k) { return C(r, R(k + s)) * G(g, k + t); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), s = a.i("s"), t = a.i("t");
            const Rational r1 = a.q("r") - 1;
            const auto& g = a.seed();
            return sum(1, n, [&](Int k) { return C(r1, R(k + s)) * G(g, k + t + 2); }) +
                   LogValue(C(r1, R(s)) * G(g, t + 1) - C(r1, R(n + s)) * G(g, n + t + 1));
        }));

    v.push_back(make(
        "comb-H-G-x", kFamily, R"a(lem837w: "x\binom{r - 1}{s} - x^{n + 1}")a",
        {p_int("n", ">= 1", n_range(1)), p_int("s", ">= 0", int_range(0, 3)),
         p_half("r", "in Z/2", [](const Assignment&, const SampleContext&) {
             std::vector<ParamValue> v;
             for (Int r = -3; r <= 5; ++r) v.emplace_back(HalfInt(r));
             for (Int tw : {-1, 1, 3}) v.emplace_back(half(tw));
             return v;
         }),
         p_rat("x", "rational", rationals({{-2, 1}, {-1, 2}, {1, 3}, {1, 1}, {2, 1}}))},
        at_least("s", 0),
        [](const Assignment& a) {
            const Int n = a.i("n"), s = a.i("s");
            const Rational r = a.q("r"), x = a.q("x");
            return sum(1, n, [&](Int k) { return C(r, R(k + s)) * pw(x, k); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), s = a.i("s");
            const Rational r1 = a.q("r") - 1, x = a.q("x");
            return sum(1, n, [&](Int k) { return pw(x, k) * (x + 1) * C(r1, R(k + s)); }) +
                   LogValue(x * C(r1, R(s)) - pw(x, n + 1) * C(r1, R(n + s)));
        }));

    v.push_back(make(
        "comb-H-G-s", kFamily, R"a(p5cp11r companion: "H_{r-1-k-s}-H_{k+s}")a", comb_params(), r_upper_ok(),
        [](const Assignment& a) {
            const Int n = a.i("n"), s = a.i("s"), t = a.i("t");
            const Rational r = a.q("r");
            const auto& g = a.seed();
            return sum(1, n, [&](Int k) {
                return (H(r - R(k + s)) - H(k + s)) * LogValue(C(r, R(k + s)) * G(g, k + t));
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), s = a.i("s"), t = a.i("t");
            const Rational r1 = a.q("r") - 1;
            const auto& g = a.seed();
            return sum(1, n, [&](Int k) {
                       return (H(r1 - R(k + s)) - H(k + s)) * LogValue(C(r1, R(k + s)) * G(g, k + t + 2));
                   }) +
                   (H(r1 - R(s)) - H(s)) * LogValue(C(r1, R(s)) * G(g, t + 1)) -
                   (H(r1 - R(n + s)) - H(n + s)) * LogValue(C(r1, R(n + s)) * G(g, n + t + 1));
        }));

    v.push_back(make(
        "comb-G3", kFamily, R"a("G_{3k+t+2}")a", comb_params(), r_upper_ok(),
        [](const Assignment& a) {
            const Int n = a.i("n"), s = a.i("s"), t = a.i("t");
            const Rational r = a.q("r");
            const auto& g = a.seed();
            return sum(1, n, [&](Int k) { return dC(r, k + s) * LogValue(G(g, 3 * k + t)); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), s = a.i("s"), t = a.i("t");
            const Rational r1 = a.q("r") - 1;
            const auto& g = a.seed();
            return LogValue(2) * sum(1, n, [&](Int k) { return dC(r1, k + s) * LogValue(G(g, 3 * k + t + 2)); }) +
                   dC(r1, s) * LogValue(G(g, t + 3)) - dC(r1, n + s) * LogValue(G(g, 3 * n + t + 3));
        }));

    v.push_back(make(
        "comb-alt", kFamily, R"a("G_{k+t-1}")a", comb_params(), r_upper_ok(),
        [](const Assignment& a) {
            const Int n = a.i("n"), s = a.i("s"), t = a.i("t");
            const Rational r = a.q("r");
            const auto& g = a.seed();
            return sum(1, n, [&](Int k) { return dC(r, k + s) * LogValue(sgn(k) * G(g, k + t)); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), s = a.i("s"), t = a.i("t");
            const Rational r1 = a.q("r") - 1;
            const auto& g = a.seed();
            return sum(1, n, [&](Int k) { return dC(r1, k + s) * LogValue(sgn(k + 1) * G(g, k + t - 1)); }) -
                   dC(r1, s) * LogValue(G(g, t + 1)) + dC(r1, n + s) * LogValue(sgn(n) * G(g, n + t + 1));
        }));

    return v;
}

}  // namespace fibharm::catalog
