// ABEL-FIB: partial summation against basic Fibonacci identities.

#include "catalog/catalog.hpp"

namespace fibharm::catalog {

namespace {

const char* const kFamily = "ABEL-FIB";

ParamSpec n_pos() { return p_int("n", ">= 1", n_range(1)); }
ParamSpec n_nonneg() { return p_int("n", ">= 0", n_range(0)); }
ParamSpec r_any() { return p_int("r", "in Z", int_range(-3, 5)); }
ParamSpec s_nonneg() { return p_int("s", ">= 0", int_range(0, 4)); }
ParamSpec t_nonneg() { return p_int("t", ">= 0", int_range(0, 4)); }

Constraint st_nonneg() { return all_of({at_least("s", 0), at_least("t", 0)}); }

Constraint st_positive_sum() {
    return all_of({at_least("s", 0), at_least("t", 0), [](const Assignment& a) -> std::optional<std::string> {
                       if (a.i("s") + a.i("t") < 1) return "s + t must be >= 1";
                       return std::nullopt;
                   }});
}

Rational Fsq(Int j) { return F(j) * F(j); }

}  // namespace

std::vector<IdentityEntry> abel_fib_entries() {
    std::vector<IdentityEntry> v;

    v.push_back(make(
        "shift-binom", kFamily, R"a(thm1_eq1: "F_{k+r+2}}{\binom{t+k+s}{t+1}}")a",
        {n_pos(), r_any(), s_nonneg(), t_nonneg()}, st_nonneg(),
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s"), t = a.i("t");
            return sum(1, n, [&](Int k) { return F(k + r + 2) * Cinv(t + k + s, t + 1); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s"), t = a.i("t");
            return sum(1, n, [&](Int k) { return F(k + r + 1) * Cinv(t + k + s, t + 1); }) -
                   F(n + r + 1) * Cinv(t + n + s + 1, t + 1) +
                   sum(1, n, [&](Int k) { return F(k + r + 1) * Cinv(t + k + s + 1, t + 1); }) +
                   F(r + 1) * Cinv(s + t + 1, t + 1);
        }));

    v.push_back(make(
        "shift-simple", kFamily, R"a(thm1_eq2: "(2k+3)F_{k+r+1}")a", {n_pos(), r_any(), s_nonneg()}, at_least("s", 0),
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            return sum(1, n, [&](Int k) { return F(k + r + 2) * inv(R(k + s), "k+s"); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            return sum(1, n, [&](Int k) { return R(2 * k + 3) * F(k + r + 1) * inv(R((k + s) * (k + s + 1)), "(k+s)(k+s+1)"); }) +
                   F(r + 1) * inv(R(s + 1), "s+1") - F(n + r + 1) * inv(R(n + s + 1), "n+s+1");
        }));

    v.push_back(make(
        "harm-shift", kFamily, R"a(thm2_eq1: "H_{t}-H_{k+t+s-1}")a", {n_pos(), r_any(), s_nonneg(), t_nonneg()},
        st_positive_sum(),
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s"), t = a.i("t");
            return sum(1, n, [&](Int k) {
                return (H(t) - H(k + t + s - 1)) * LogValue(Cinv(t + k + s - 1, t + 1) * F(k + r - 1));
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s"), t = a.i("t");
            return sum(1, n, [&](Int k) {
                       return (H(t) - H(k + t + s - 1)) * LogValue(Cinv(t + k + s - 1, t + 1) * F(k + r + 1));
                   }) -
                   sum(1, n, [&](Int k) {
                       return (H(t) - H(k + t + s)) * LogValue(Cinv(t + k + s, t + 1) * F(k + r + 1));
                   }) +
                   (H(t) - H(n + t + s)) * LogValue(Cinv(n + t + s, t + 1) * F(n + r + 1)) -
                   (H(t) - H(s + t)) * LogValue(Cinv(t + s, t + 1) * F(r + 1));
        }));

    v.push_back(make(
        "prodFF-H", kFamily, R"a(xslb526: "\frac{H_n}{n} F_n^2")a", {n_pos()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(1, n, [&](Int k) { return H(k) * LogValue(F(k - 2) * F(k + 1) / R(k)); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(1, n - 1, [&](Int k) { return (H(k + 1) - 1) * LogValue(Fsq(k) / R(k * (k + 1))); }) +
                   H(n) * LogValue(Fsq(n) / R(n));
        }));

    v.push_back(make(
        "prodFF-O", kFamily, R"a(qsl14h7: "\frac{O_n}{\binom{2n}{n}}F_n^2")a", {n_pos()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(1, n, [&](Int k) {
                return pw(4, k) / R(k) * O(k) / C(2 * k, k) * F(k - 2) * F(k + 1);
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            return LogValue(2) * sum(1, n - 1, [&](Int k) {
                       return pw(4, k) / R(k * (k + 1)) * (O(k + 1) - 1) / C(2 * (k + 1), k + 1) * Fsq(k);
                   }) +
                   LogValue(pw(4, n) / R(n) * O(n) / C(2 * n, n) * Fsq(n));
        }));

    v.push_back(make(
        "prodFF-gen", kFamily, R"a(c6bw3gq: "F_{k + r - 1} F_{k + r + 2}")a", {n_pos(), r_any(), s_nonneg(), t_nonneg()},
        st_nonneg(),
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s"), t = a.i("t");
            return sum(1, n, [&](Int k) {
                return (H(k + s + t) - H(t)) * LogValue(Cinv(k + s + t, t + 1) * F(k + r - 1) * F(k + r + 2));
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s"), t = a.i("t");
            return LogValue(Rational(t + 1, t + 2)) * sum(1, n, [&](Int k) {
                       return (H(k + s + t) - H(t + 1)) * LogValue(Cinv(k + s + t, t + 2) * Fsq(k + r));
                   }) -
                   (H(s + t) - H(t)) * LogValue(Cinv(s + t, t + 1) * Fsq(r + 1)) +
                   (H(n + s + t) - H(t)) * LogValue(Cinv(n + s + t, t + 1) * Fsq(n + r + 1));
        }));

    v.push_back(make(
        "fib4-sq", kFamily, R"a(thm1_Fib_squared: "F_{4(k+r)+2}")a", {n_pos(), r_any(), s_nonneg(), t_nonneg()},
        st_positive_sum(),
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s"), t = a.i("t");
            return sum(1, n, [&](Int k) { return F(4 * (k + r) + 2) * Cinv(k + t + s - 1, t + 1); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s"), t = a.i("t");
            return LogValue(Rational(t + 1, t + 2)) *
                       sum(1, n, [&](Int k) { return Fsq(2 * (k + r) + 2) * Cinv(k + t + s, t + 2); }) +
                   LogValue(Fsq(2 * (n + r) + 2) * Cinv(n + t + s, t + 1) - Fsq(2 * (r + 1)) * Cinv(t + s, t + 1));
        }));

    v.push_back(make(
        "fib4-sq-simple", kFamily, R"a(thm1_Fib_squared: "F_{2(n+r)+2}^2}{n+s}")a",
        {n_pos(), r_any(), p_int("s", ">= 1", int_range(1, 4))}, at_least("s", 1),
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            return sum(1, n, [&](Int k) { return F(4 * (k + r) + 2) * inv(R(k + s - 1), "k+s-1"); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            return sum(1, n, [&](Int k) { return Fsq(2 * (k + r) + 2) * inv(R((k + s) * (k + s - 1)), "(k+s)(k+s-1)"); }) +
                   LogValue(Fsq(2 * (n + r) + 2) / R(n + s) - Fsq(2 * (r + 1)) / R(s));
        }));

    v.push_back(make(
        "fib4-sq-H", kFamily, R"a(thm2_Fib_squared: "H_t - H _{k + t + s - 1}")a",
        {n_pos(), r_any(), s_nonneg(), t_nonneg()}, st_positive_sum(),
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s"), t = a.i("t");
            return sum(1, n, [&](Int k) {
                return (H(t) - H(k + t + s - 1)) * LogValue(Cinv(k + t + s - 1, t + 1) * F(4 * (k + r) + 2));
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s"), t = a.i("t");
            return LogValue(Rational(t + 1, t + 2)) * sum(1, n, [&](Int k) {
                       return (H(t + 1) - H(k + t + s)) * LogValue(Cinv(k + t + s, t + 2) * Fsq(2 * (k + r) + 2));
                   }) +
                   (H(t) - H(n + t + s)) * LogValue(Cinv(n + t + s, t + 1) * Fsq(2 * (n + r) + 2)) -
                   (H(t) - H(t + s)) * LogValue(Cinv(t + s, t + 1) * Fsq(2 * (r + 1)));
        }));

    v.push_back(make(
        "fib4-sq-H-simple", kFamily, R"a(thm2_Fib_squared: "H_{k+s}-1")a",
        {n_pos(), r_any(), p_int("s", ">= 1", int_range(1, 4))}, at_least("s", 1),
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            return sum(1, n, [&](Int k) {
                return H(k + s - 1) * LogValue(inv(R(k + s - 1), "k+s-1") * F(4 * (k + r) + 2));
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            return sum(1, n, [&](Int k) {
                       return (H(k + s) - 1) * LogValue(inv(R((k + s) * (k + s - 1)), "(k+s)(k+s-1)") * Fsq(2 * (k + r) + 2));
                   }) +
                   H(n + s) * LogValue(Fsq(2 * (n + r) + 2) / R(n + s)) - H(s) * LogValue(Fsq(2 * (r + 1)) / R(s));
        }));

    // Reciprocal products. a_k = F_{r(k+1)}/F_{rk} style telescopers.
    auto r_pos = [] { return p_int("r", ">= 1", int_range(-3, 5)); };

    v.push_back(make(
        "rec-FF", kFamily, R"a(eq1_thm1_rec: "L_r H_s")a", {n_pos(), r_pos(), s_nonneg()},
        all_of({at_least("r", 1), at_least("s", 0)}),
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            return sum(1, n, [&](Int k) {
                return H(k + s - 1) * LogValue(sgn(r * k) * inv(F(r * k) * F(r * (k + 1)), "F_{rk}F_{r(k+1)}"));
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            const LogValue inner =
                sum(1, n, [&](Int k) { return F(r * (k + 2)) / F(r * (k + 1)) / R(k + s); }) -
                H(n + s) * LogValue(F(r * (n + 2)) / F(r * (n + 1))) + H(s) * LogValue(L(r));
            return inner * LogValue(inv(Fsq(r), "F_r^2"));
        }));

    v.push_back(make(
        "rec-FF-part", kFamily, R"a("\frac{F_{n}}{F_{n+1}} H_{n+1}")a", {n_pos()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(1, n, [&](Int k) { return H(k) * LogValue(sgn(k) / (F(k) * F(k + 1))); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(1, n, [&](Int k) { return F(k) / F(k + 1) / R(k + 1); }) -
                   H(n + 1) * LogValue(F(n) / F(n + 1));
        }));

    v.push_back(make(
        "rec-FL", kFamily, R"a(eq2_thm1_rec: "\frac{L_{r(k+1)}}{F_{r(k+1)}}")a", {n_pos(), r_pos(), s_nonneg()},
        all_of({at_least("r", 1), at_least("s", 0)}),
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            return sum(1, n, [&](Int k) {
                return H(k + s - 1) * LogValue(sgn(r * k) * inv(F(r * k) * F(r * (k + 1)), "F_{rk}F_{r(k+1)}"));
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            const LogValue inner =
                sum(1, n, [&](Int k) { return L(r * (k + 1)) / F(r * (k + 1)) / R(k + s); }) -
                H(n + s) * LogValue(L(r * (n + 1)) / F(r * (n + 1))) + H(s) * LogValue(L(r) / F(r));
            return inner * LogValue(inv(R(2) * F(r), "2F_r"));
        }));

    v.push_back(make(
        "rec-FL-cor", kFamily, R"a(corollary to eq2_thm1_rec: "L_{r(n+1)} - \frac{2}{F_r} F_{r(n+2)}")a",
        {n_pos(), r_pos(), s_nonneg()}, all_of({at_least("r", 1), at_least("s", 0)}),
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            return sum(1, n, [&](Int k) { return L(r * (k + 1)) * inv(F(r * (k + 1)), "F_{r(k+1)}") / R(k + s); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            const Rational two_over_fr = R(2) * inv(F(r), "F_r");
            return LogValue(two_over_fr) *
                       sum(1, n, [&](Int k) { return F(r * (k + 2)) * inv(F(r * (k + 1)), "F_{r(k+1)}") / R(k + s); }) +
                   H(n + s) * LogValue((L(r * (n + 1)) - two_over_fr * F(r * (n + 2))) * inv(F(r * (n + 1)), "F_{r(n+1)}")) +
                   H(s) * LogValue(L(r) / F(r));
        }));

    v.push_back(make(
        "rec-odd", kFamily, R"a(eq1_thm3_rec: "\frac{H_{n+s}}{F_{2r(n+1)}}")a",
        {n_pos(), p_int("r", "odd >= 1", int_range(-3, 5)), s_nonneg()},
        all_of({at_least("r", 1), odd("r"), at_least("s", 0)}),
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            return sum(1, n, [&](Int k) {
                return H(k + s - 1) *
                       LogValue(F(r * (2 * k + 1)) * inv(F(2 * r * k) * F(2 * r * (k + 1)), "F_{2rk}F_{2r(k+1)}"));
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            const LogValue inner = sum(1, n, [&](Int k) { return inv(F(2 * r * (k + 1)), "F_{2r(k+1)}") / R(k + s); }) -
                                   H(n + s) * LogValue(F(2 * r * (n + 1)).inv()) + H(s) * LogValue(F(2 * r).inv());
            return inner * LogValue(inv(L(r), "L_r"));
        }));

    v.push_back(make(
        "rec-odd-part", kFamily, R"a(particular of eq1_thm3_rec: "\frac{F_{2k+1}}{F_{2k} F_{2k+2}}")a", {n_pos()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(1, n, [&](Int k) { return H(k) * LogValue(F(2 * k + 1) / (F(2 * k) * F(2 * k + 2))); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(1, n, [&](Int k) { return F(2 * k + 2).inv() / R(k + 1); }) -
                   H(n + 1) * LogValue(F(2 * n + 2).inv()) + LogValue(1);
        }));

    v.push_back(make(
        "rec-sq", kFamily, R"a(eq1_thm4_rec: "F_{rk}^2 F_{r(k+1)}^2")a",
        {n_pos(), p_int("r", "even >= 2", int_range(-3, 5)), s_nonneg()},
        all_of({at_least("r", 2), even("r"), at_least("s", 0)}),
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            return sum(1, n, [&](Int k) {
                return H(k + s - 1) *
                       LogValue(F(r * (2 * k + 1)) * inv(Fsq(r * k) * Fsq(r * (k + 1)), "F_{rk}^2F_{r(k+1)}^2"));
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            const LogValue inner = sum(1, n, [&](Int k) { return inv(Fsq(r * (k + 1)), "F_{r(k+1)}^2") / R(k + s); }) -
                                   H(n + s) * LogValue(Fsq(r * (n + 1)).inv()) + H(s) * LogValue(Fsq(r).inv());
            return inner * LogValue(inv(F(r), "F_r"));
        }));

    v.push_back(make(
        "rec-sq-part", kFamily, R"a(particular of eq1_thm4_rec: "\frac{F_{4k+2}}{F_{2k}^2 F_{2k+2}^2}")a", {n_pos()},
        nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(1, n, [&](Int k) { return H(k) * LogValue(F(4 * k + 2) / (Fsq(2 * k) * Fsq(2 * k + 2))); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(1, n, [&](Int k) { return Fsq(2 * k + 2).inv() / R(k + 1); }) -
                   H(n + 1) * LogValue(Fsq(2 * n + 2).inv()) + LogValue(1);
        }));

    v.push_back(make(
        "rec-quad", kFamily, R"a(eq1_thm5_rec: "F_{rk} F_{r(k+1)}^2 F_{r(k+2)}")a",
        {n_pos(), p_int("r", "even >= 2", int_range(-3, 5)), s_nonneg()},
        all_of({at_least("r", 2), even("r"), at_least("s", 0)}),
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            return sum(1, n, [&](Int k) {
                return H(k + s - 1) * LogValue(F(2 * r * (k + 1)) *
                                               inv(F(r * k) * Fsq(r * (k + 1)) * F(r * (k + 2)),
                                                   "F_{rk}F_{r(k+1)}^2F_{r(k+2)}"));
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), r = a.i("r"), s = a.i("s");
            const LogValue inner =
                sum(1, n, [&](Int k) { return (F(r * (k + 1)) * F(r * (k + 2))).inv() / R(k + s); }) -
                H(n + s) * LogValue((F(r * (n + 1)) * F(r * (n + 2))).inv()) +
                H(s) * LogValue((F(r) * F(2 * r)).inv());
            return inner * LogValue(inv(F(r), "F_r"));
        }));

    v.push_back(make(
        "rec-quad-part", kFamily, R"a(particular of eq1_thm5_rec: "\frac{1}{F_{2k+2} F_{2k+4}}")a", {n_pos()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(1, n, [&](Int k) {
                return H(k) * LogValue(F(4 * k + 4) / (F(2 * k) * Fsq(2 * k + 2) * F(2 * k + 4)));
            });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(1, n, [&](Int k) { return (F(2 * k + 2) * F(2 * k + 4)).inv() / R(k + 1); }) -
                   H(n + 1) * LogValue((F(2 * n + 2) * F(2 * n + 4)).inv()) + LogValue(Rational(1, 3));
        }));

    v.push_back(make(
        "conv-sq", kFamily, R"a("H_k F_{n - k}^2")a", {n_nonneg()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(0, n, [&](Int k) { return H(k) * LogValue(Fsq(n - k)); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            return sum(0, n, [&](Int k) { return F(n - k) * F(n - k - 1) / R(k + 1); });
        }));

    v.push_back(make(
        "gib-sq", kFamily, R"a("H_k G_{k + 1}^2")a", {n_nonneg(), p_seed()}, nullptr,
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return sum(0, n, [&](Int k) { return H(k) * LogValue(G(g, k + 1) * G(g, k + 1)); });
        },
        [](const Assignment& a) {
            const Int n = a.i("n");
            const auto& g = a.seed();
            return H(n + 1) * LogValue(G(g, n + 1) * G(g, n + 2)) -
                   sum(0, n, [&](Int k) { return G(g, k + 1) * G(g, k + 2) / R(k + 1); });
        }));

    v.push_back(make(
        "gib-prod", kFamily, R"a(g8er2qv: "if $m$ is odd")a",
        {n_nonneg(), p_int("m", ">= 0", int_range(0, 3)), r_any(), p_int("s", ">= 1", int_range(1, 4)), p_seed()},
        all_of({at_least("m", 0), at_least("s", 1)}),
        [](const Assignment& a) {
            const Int n = a.i("n"), m = a.i("m"), r = a.i("r"), s = a.i("s");
            const auto& g = a.seed();
            auto prod = [&](Int start) { return Rational(gib_product(g, start, 2 * m)); };
            return LogValue(-1) * sum(0, n, [&](Int k) { return prod(k + r + 1) / R(k + s); }) +
                   H(n + s) * LogValue(prod(n + r + 1)) - H(s - 1) * LogValue(prod(r));
        },
        [](const Assignment& a) {
            const Int n = a.i("n"), m = a.i("m"), r = a.i("r"), s = a.i("s");
            const auto& g = a.seed();
            auto inner = [&](Int k) { return Rational(gib_product(g, k + r + 1, std::max<Int>(2 * m - 1, 0))); };
            if (m % 2 == 0) {
                return LogValue(F(m)) * sum(0, n, [&](Int k) {
                           return H(k + s - 1) * LogValue((G(g, k + m + r - 1) + G(g, k + m + r + 1)) * inner(k));
                       });
            }
            return LogValue(L(m)) *
                   sum(0, n, [&](Int k) { return H(k + s - 1) * LogValue(G(g, k + m + r) * inner(k)); });
        }));

    return v;
}

}  // namespace fibharm::catalog
