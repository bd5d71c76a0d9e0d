// BT-BOYAD: harmonic sums from binomial-transform pairs built on gibonacci
// numbers and on H_{k+m} / (k+m).

#include "catalog/catalog.hpp"

namespace fibharm::catalog {

namespace {

const char* const kFamily = "BT-BOYAD";

ParamSpec n_from(Int lo) { return p_int("n", lo == 0 ? ">= 0" : ">= 1", n_range(lo)); }
ParamSpec t_any() { return p_int("t", "in Z", int_range(0, 4)); }
ParamSpec r_any() { return p_int("r", "in Z", int_range(-3, 5)); }

// G_0 L_j - G_j, the conjugate sequence paired with G_j in the transform.
Rational conj(const GibonacciSeed& g, Int j) { return Rational(g.g0()) * L(j) - G(g, j); }

// m in Z/2 and not a negative integer; bt2 also excludes m = 0.
ParamSpec m_param(std::initializer_list<Int> twice) {
    return p_half("m", "in Z/2, not a negative integer", halves(twice));
}

Constraint m_admissible(Int min_integer) {
    return [min_integer](const Assignment& a) -> std::optional<std::string> {
        const HalfInt m = a.h("m");
        if (m.is_integer() && m.to_integer() < min_integer) {
            return "integer m must be >= " + std::to_string(min_integer);
        }
        return std::nullopt;
    };
}

// 4^k C(n,k) / C(2k,k)
Rational central(Int n, Int k) { return pw(4, k) * C(n, k) / C(2 * k, k); }

}  // namespace

std::vector<IdentityEntry> boyad_entries() {
    std::vector<IdentityEntry> v;

    v.push_back(make(
        "bt-G-scaled", kFamily, R"a(oxjlkzh: "\frac{G_{tk + r}}{L_t^k}")a", {n_from(0), t_any(), r_any(), p_seed()},
        nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t"), r = a.i("r");
            const auto& g = a.seed();
            const Rational lt = L(t);
            return sum(0, n, [&](Int k) { return sgn(k) * C(n, k) * G(g, t * k + r) / pw(lt, k); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t"), r = a.i("r");
            const auto& g = a.seed();
            return LogValue(sgn(r) / pw(L(t), n) * conj(g, t * n - r));
        }));

    v.push_back(make(
        "boyad-H-G", kFamily, R"a("L_t^{n - k} H_k G_{tk + r}")a", {n_from(0), t_any(), r_any(), p_seed()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t"), r = a.i("r");
            const auto& g = a.seed();
            const Rational lt = L(t);
            return sum(0, n, [&](Int k) { return sgn(k) * C(n, k) * pw(lt, n - k) * Hq(k) * G(g, t * k + r); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t"), r = a.i("r");
            const auto& g = a.seed();
            const Rational lt = L(t);
            return LogValue(sgn(r)) * H(n) * LogValue(conj(g, t * n - r)) -
                   LogValue(sgn(r)) *
                       sum(0, n - 1, [&](Int k) { return pw(lt, n - k) / R(n - k) * conj(g, t * k - r); });
        }));

    v.push_back(make(
        "boyad-H-F", kFamily, R"a("L_t^{n - k} H_k F_{tk + r}")a", {n_from(0), t_any(), r_any()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t"), r = a.i("r");
            const Rational lt = L(t);
            return sum(0, n, [&](Int k) { return sgn(k) * C(n, k) * pw(lt, n - k) * Hq(k) * F(t * k + r); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t"), r = a.i("r");
            const Rational lt = L(t);
            return LogValue(sgn(r + 1) * Hq(n) * F(t * n - r)) +
                   LogValue(sgn(r)) * sum(0, n - 1, [&](Int k) { return pw(lt, n - k) * F(t * k - r) / R(n - k); });
        }));

    v.push_back(make(
        "boyad-H-L", kFamily, R"a("L_t^{n - k} H_k L_{tk + r}")a", {n_from(0), t_any(), r_any()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t"), r = a.i("r");
            const Rational lt = L(t);
            return sum(0, n, [&](Int k) { return sgn(k) * C(n, k) * pw(lt, n - k) * Hq(k) * L(t * k + r); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t"), r = a.i("r");
            const Rational lt = L(t);
            return LogValue(sgn(r) * Hq(n) * L(t * n - r)) -
                   LogValue(sgn(r)) * sum(0, n - 1, [&](Int k) { return pw(lt, n - k) * L(t * k - r) / R(n - k); });
        }));

    v.push_back(make(
        "boyad-HF-part", kFamily, R"a(lcrsozt: "- H_n F_n + \sum")a", {n_from(0)}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(0, n, [&](Int k) { return sgn(k) * C(n, k) * Hq(k) * F(k); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            return LogValue(-(Hq(n) * F(n))) + sum(0, n - 1, [&](Int k) { return F(k) / R(n - k); });
        }));

    v.push_back(make(
        "boyad-HL-part", kFamily, R"a("H_n L_n - \sum")a", {n_from(0)}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(0, n, [&](Int k) { return sgn(k) * C(n, k) * Hq(k) * L(k); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            return LogValue(Hq(n) * L(n)) - sum(0, n - 1, [&](Int k) { return L(k) / R(n - k); });
        }));

    v.push_back(make(
        "boyad-rev", kFamily, R"a("H_n G_{tn + r}")a", {n_from(0), t_any(), r_any(), p_seed()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t"), r = a.i("r");
            const auto& g = a.seed();
            const Rational lt = L(t);
            return sum(0, n, [&](Int k) { return sgn(k + r) * C(n, k) * Hq(k) * pw(lt, n - k) * conj(g, t * k - r); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t"), r = a.i("r");
            const auto& g = a.seed();
            const Rational lt = L(t);
            return LogValue(Hq(n) * G(g, t * n + r)) -
                   sum(0, n - 1, [&](Int k) { return pw(lt, n - k) * G(g, t * k + r) / R(n - k); });
        }));

    v.push_back(make(
        "boyad-rev-F", kFamily, R"a("H_n F_{tn+r}")a", {n_from(0), t_any(), r_any()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t"), r = a.i("r");
            const Rational lt = L(t);
            return sum(0, n, [&](Int k) { return sgn(k + r + 1) * C(n, k) * pw(lt, n - k) * Hq(k) * F(t * k - r); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t"), r = a.i("r");
            const Rational lt = L(t);
            return LogValue(Hq(n) * F(t * n + r)) -
                   sum(0, n - 1, [&](Int k) { return pw(lt, n - k) * F(t * k + r) / R(n - k); });
        }));

    v.push_back(make(
        "boyad-rev-L", kFamily, R"a("H_n L_{tn+r}")a", {n_from(0), t_any(), r_any()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t"), r = a.i("r");
            const Rational lt = L(t);
            return sum(0, n, [&](Int k) { return sgn(k + r) * C(n, k) * pw(lt, n - k) * Hq(k) * L(t * k - r); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), t = a.i("t"), r = a.i("r");
            const Rational lt = L(t);
            return LogValue(Hq(n) * L(t * n + r)) -
                   sum(0, n - 1, [&](Int k) { return pw(lt, n - k) * L(t * k + r) / R(n - k); });
        }));

    v.push_back(make(
        "bt2-m", kFamily, R"a(uwn5wo9: "m\,G_k H_{k + m}")a", {n_from(0), m_param({2, 4, 6, -1, -3}), p_seed()},
        m_admissible(1),
        [](const Assignment& a) {
            const Int n = a.i("n");
            const Rational m = a.q("m");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) {
                const Rational km = R(k) + m;
                return H(km) * LogValue(sgn(k + 1) * C(n, k) * m * G(g, k) * inv(km, "k + m"));
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const Rational m = a.q("m");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) {
                return (H(R(k) + m) - H(k)) * LogValue(sgn(k) * C(n, k) * Cinv(R(k) + m, m) * G(g, n - 2 * k));
            });
        }));

    v.push_back(make(
        "bt2-m-sym", kFamily, R"a(mlvhmnt: "\frac{m}{k + m}G_{n - 2k} H_{k + m}")a",
        {n_from(0), m_param({2, 4, 6, -1, -3}), p_seed()}, m_admissible(1),
        [](const Assignment& a) {
            const Int n = a.i("n");
            const Rational m = a.q("m");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) {
                return (H(R(k) + m) - H(k)) * LogValue(sgn(k + 1) * C(n, k) * Cinv(R(k) + m, m) * G(g, k));
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const Rational m = a.q("m");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) {
                const Rational km = R(k) + m;
                return H(km) * LogValue(sgn(k) * C(n, k) * m * inv(km, "k + m") * G(g, n - 2 * k));
            });
        }));

    v.push_back(make(
        "bt2-m1a", kFamily, R"a("\frac{G_{n - 2k}}{(k + 1)^2}")a", {n_from(0), p_seed()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return sgn(k + 1) * C(n, k) * G(g, k) * Hq(k + 1) / R(k + 1); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return sgn(k) * C(n, k) * G(g, n - 2 * k) / pw(R(k + 1), 2); });
        }));

    v.push_back(make(
        "bt2-m1b", kFamily, R"a("\frac{G_k }{\left( {k + 1} \right)^2 }")a", {n_from(0), p_seed()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return sgn(k + 1) * C(n, k) * G(g, k) / pw(R(k + 1), 2); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) {
                return sgn(k) * C(n, k) * G(g, n - 2 * k) * Hq(k + 1) / R(k + 1);
            });
        }));

    v.push_back(make(
        "prop1-ln2-a", kFamily, R"a(new1: "2O_k-H_k-2\ln 2")a", {n_from(0), p_seed()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return LogValue(2) * sum(0, n, [&](Int k) {
                       return (LogValue::ln2() - LogValue(O(k))) *
                              LogValue(sgn(k + 1) * C(n, k) / R(2 * k - 1) * G(g, k));
                   });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) {
                return (LogValue(2 * O(k) - Hq(k)) - LogValue(2) * LogValue::ln2()) *
                       LogValue(sgn(k) * central(n, k) * G(g, n - 2 * k));
            });
        }));

    v.push_back(make(
        "prop1-ln2-b", kFamily, R"a(new2: "O_k-\ln 2")a", {n_from(0), p_seed()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) {
                return (LogValue(2 * O(k) - Hq(k)) - LogValue(2) * LogValue::ln2()) *
                       LogValue(sgn(k + 1) * central(n, k) * G(g, k));
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return LogValue(2) * sum(0, n, [&](Int k) {
                       return (LogValue(O(k)) - LogValue::ln2()) *
                              LogValue(sgn(k + 1) * C(n, k) / R(2 * k - 1) * G(g, n - 2 * k));
                   });
        }));

    v.push_back(make(
        "prop1-a", kFamily, R"a(irration1: "2^{2k}\frac{\binom{n}{k}}{\binom{2k}{k}}G_{n-2k}")a", {n_from(0), p_seed()},
        nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return sgn(k + 1) * C(n, k) * G(g, k) / R(2 * k - 1); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return sgn(k + 1) * central(n, k) * G(g, n - 2 * k); });
        }));

    v.push_back(make(
        "prop1-b", kFamily, R"a(irration2: "(H_k-2O_k)G_{n-2k}")a", {n_from(0), p_seed()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return sgn(k + 1) * C(n, k) * O(k) * G(g, k) / R(2 * k - 1); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) {
                return sgn(k) * central(n, k) / 2 * (Hq(k) - 2 * O(k)) * G(g, n - 2 * k);
            });
        }));

    v.push_back(make(
        "prop2-a", kFamily, R"a(irration3: "\frac{G_{n-2k}}{2k-1}")a", {n_from(0), p_seed()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return sgn(k) * C(n, k) * G(g, n - 2 * k) / R(2 * k - 1); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return sgn(k) * central(n, k) * G(g, k); });
        }));

    v.push_back(make(
        "prop2-b", kFamily, R"a(irration4: "(2O_k-H_k)G_k")a", {n_from(0), p_seed()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return sgn(k + 1) * C(n, k) * O(k) * G(g, n - 2 * k) / R(2 * k - 1); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) {
                return sgn(k + 1) * central(n, k) / 2 * (2 * O(k) - Hq(k)) * G(g, k);
            });
        }));

    v.push_back(make(
        "bt3", kFamily, R"a(x63o4jh: "G_n H_m")a", {n_from(1), m_param({0, 2, 4, 6, -1, -3}), p_seed()}, m_admissible(0),
        [](const Assignment& a) {
            const Int n = a.i("n");
            const Rational m = a.q("m");
            const auto& g = a.seed();
            return sum(1, n, [&](Int k) { return H(R(k) + m) * LogValue(sgn(k + 1) * C(n, k) * G(g, k)); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const Rational m = a.q("m");
            const auto& g = a.seed();
            return H(m) * LogValue(G(g, n)) + sum(1, n, [&](Int k) {
                       return sgn(k + 1) * C(n, k) * Cinv(R(k) + m, m) * G(g, n - 2 * k) / R(k);
                   });
        }));

    v.push_back(make(
        "bt3-sym", kFamily, R"a("\binom{k + m}{m}^{ - 1} \frac{G_k}{k}")a", {n_from(1), m_param({0, 2, 4, 6, -1, -3}), p_seed()},
        m_admissible(0),
        [](const Assignment& a) {
            const Int n = a.i("n");
            const Rational m = a.q("m");
            const auto& g = a.seed();
            return sum(1, n, [&](Int k) { return sgn(k) * C(n, k) * Cinv(R(k) + m, m) * G(g, k) / R(k); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const Rational m = a.q("m");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return H(R(k) + m) * LogValue(sgn(k) * C(n, k) * G(g, n - 2 * k)); });
        }));

    v.push_back(make(
        "bt3-m0a", kFamily, R"a("\frac{G_{n - 2k} }{k}")a", {n_from(1), p_seed()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(1, n, [&](Int k) { return sgn(k) * C(n, k) * G(g, k) * Hq(k); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(1, n, [&](Int k) { return sgn(k) * C(n, k) * G(g, n - 2 * k) / R(k); });
        }));

    v.push_back(make(
        "bt3-m0b", kFamily, R"a("G_{n - 2k} H_k")a", {n_from(1), p_seed()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(1, n, [&](Int k) { return sgn(k + 1) * C(n, k) * G(g, k) / R(k); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(1, n, [&](Int k) { return sgn(k) * C(n, k) * G(g, n - 2 * k) * Hq(k); });
        }));

    return v;
}

}  // namespace fibharm::catalog
