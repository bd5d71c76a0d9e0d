// BT-GQ: the m-derivative of the Gould-Quaintance transform identity applied
// to the pair T_k = G_{tk+s}/L_t^k, tau_k = (-1)^s X_k/L_t^k with
// X_k = G_0 L_{tk-s} - G_{tk-s}.

#include "catalog/catalog.hpp"

namespace fibharm::catalog {

namespace {

const char* const kFamily = "BT-GQ";

struct Pair {
    const GibonacciSeed& g;
    Int s, t;
    Rational lt;

    explicit Pair(const Assignment& a) : g(a.seed()), s(a.i("s")), t(a.i("t")), lt(L(t)) {}

    Rational T(Int k) const { return G(g, t * k + s) / pw(lt, k); }
    Rational X(Int k) const { return Rational(g.g0()) * L(t * k - s) - G(g, t * k - s); }
    Rational XL(Int k) const { return X(k) / pw(lt, k); }
    Rational tau(Int k) const { return sgn(s) * XL(k); }
    // Mixed subscript G_0 L_{tk+s} - G_{tk-s}, as displayed in the r = 0 cases.
    Rational Xmixed(Int k) const { return Rational(g.g0()) * L(t * k + s) - G(g, t * k - s); }
};

std::vector<ParamSpec> with_st(std::vector<ParamSpec> head) {
    head.push_back(p_int("s", "in Z", int_range(0, 4)));
    head.push_back(p_int("t", "in Z", int_range(0, 4)));
    head.push_back(p_seed());
    return head;
}

ParamSpec n_nonneg() { return p_int("n", ">= 0", n_range(0)); }

Constraint not_negative_integers(std::initializer_list<const char*> names) {
    std::vector<Constraint> cs;
    for (const char* n : names) cs.push_back(not_negative_integer(n));
    return all_of(std::move(cs));
}

// sum_k (-1)^k C(n,k) C(r+m+n-k+1, m+1)^{-1} (H_{m+1} - H_{r+m+n-k+1}) u_k
template <class U>
LogValue gq_left(Int n, const Rational& m, const Rational& r, U u) {
    return sum(0, n, [&](Int k) {
        const Rational top = r + m + R(n - k + 1);
        return (H(m + 1) - H(top)) * LogValue(sgn(k) * C(n, k) * Cinv(top, m + 1) * u(k));
    });
}

// (m+1)/(r+1) sum (-1)^{n-k} C(n,k) C(top, r+1)^{-1} (H_{m+n-k} - H_top) v_k
//   + 1/(r+1) sum (-1)^{n-k} C(n,k) C(top, r+1)^{-1} v_k
template <class V>
LogValue gq_right(Int n, const Rational& m, const Rational& r, V v) {
    const Rational r1 = inv(r + 1, "r + 1");
    LogValue first = sum(0, n, [&](Int k) {
        const Rational top = r + m + R(n - k + 1);
        return (H(m + R(n - k)) - H(top)) * LogValue(sgn(n - k) * C(n, k) * Cinv(top, r + 1) * v(k));
    });
    LogValue second = sum(0, n, [&](Int k) {
        const Rational top = r + m + R(n - k + 1);
        return sgn(n - k) * C(n, k) * Cinv(top, r + 1) * v(k);
    });
    first *= (m + 1) * r1;
    second *= r1;
    return first + second;
}

// (1 - H_{r+n-k+1}) / (r+n-k+1)
LogValue m0_weight(Int n, Int k, const Rational& r) {
    const Rational top = r + R(n - k + 1);
    return (LogValue(1) - H(top)) * LogValue(inv(top, "r + n - k + 1"));
}

// The two k < n sums of the odd-harmonic corollaries, sign (-1)^{n-k+1+e}.
template <class V>
LogValue odd_right(Int n, Int r, Int e, V v) {
    const Rational scale = pw(4, r + 1) / R(r + 1);
    LogValue acc = sum(0, n - 1, [&](Int k) {
        const Rational w = sgn(n - k + 1 + e) * C(n, k) * C(2 * (n - k - 1), n - k - 1) /
                           (C(2 * (r + n - k), r + 1) * C(r + n - k, r + 1));
        return w * ((O(n - k - 1) - O(r + n - k)) * v(k) + v(k));
    });
    acc *= scale;
    return acc;
}

// sum (-1)^{k+1+e} C(n,k) C(2(r+n-k), r+n-k)^{-1} 2^{2(r+n-k)+1} O_{r+n-k} u_k
template <class U>
LogValue odd_left(Int n, Int r, Int e, U u) {
    return sum(0, n, [&](Int k) {
        const Int j = r + n - k;
        return sgn(k + 1 + e) * C(n, k) / C(2 * j, j) * pw(2, 2 * j + 1) * O(j) * u(k);
    });
}

// r = 0 odd-harmonic displays: the two k < n sums with (n-k)^2 and (n-k)^2 (2n-2k-1).
template <class V>
LogValue odd_part_right(Int n, Int s, V v) {
    return sum(0, n - 1, [&](Int k) {
        const Int j = n - k;
        const Rational w = sgn(j + s + 1) * C(n, k) * C(2 * (j - 1), j - 1) / pw(R(j), 2);
        return w * v(k) - w / R(2 * j - 1) * v(k);
    });
}

template <class U>
LogValue odd_part_left(Int n, U u) {
    return sum(0, n, [&](Int k) { return sgn(k + 1) * pw(4, n - k) * C(n, k) / C(2 * (n - k), n - k) * O(n - k) * u(k); });
}

}  // namespace

std::vector<IdentityEntry> gq_entries() {
    std::vector<IdentityEntry> v;

    const auto m_samples = halves({0, 2, 4, 6, -1, -3});
    const auto r_int = int_range(0, 3);

    v.push_back(make(
        "gq-thm", kFamily, R"a(gooday1: "H_{m+1}-H_{r+m+n-k+1}")a",
        with_st({n_nonneg(), p_half("m", "in Z/2, not a negative integer", m_samples),
                 p_half("r", "in Z/2, not a negative integer", halves({0, 2, 4, 6}))}),
        not_negative_integers({"m", "r"}),
        [](const Assignment& a) {
            const Pair p(a);
            return gq_left(a.i("n"), a.q("m"), a.q("r"), [&](Int k) { return p.T(k); });
        },
        [](const Assignment& a) {
            const Pair p(a);
            return gq_right(a.i("n"), a.q("m"), a.q("r"), [&](Int k) { return p.tau(k); });
        }));

    v.push_back(make(
        "gq-cor-m0", kFamily, R"a(go13: "\left(1-H_{r+n-k+1}\right)")a",
        with_st({n_nonneg(), p_half("r", "in Z/2, not a negative integer", halves({0, 2, 4, 6, -1, 1}))}),
        not_negative_integer("r"),
        [](const Assignment& a) {
            const Pair p(a);
            const Int n = a.i("n");
            const Rational r = a.q("r");
            return sum(0, n, [&](Int k) { return m0_weight(n, k, r) * LogValue(sgn(k) * C(n, k) * p.T(k)); });
        },
        [](const Assignment& a) {
            const Pair p(a);
            const Int n = a.i("n");
            const Rational r = a.q("r");
            const Rational r1 = inv(r + 1, "r + 1");
            return sum(0, n, [&](Int k) {
                const Rational top = r + R(n - k + 1);
                const Rational w = r1 * sgn(n - k - p.s) * C(n, k) * Cinv(top, r + 1) * p.XL(k);
                return (H(n - k) - H(top) + LogValue(1)) * LogValue(w);
            });
        }));

    IdentityEntry may1 = make(
        "gq-cor-m0-part", kFamily, R"a(may1: "(1-H_{n-k+1})")a", with_st({n_nonneg()}), nullptr,
        [](const Assignment& a) {
            const Pair p(a);
            const Int n = a.i("n");
            return sum(0, n, [&](Int k) {
                return (LogValue(1) - H(n - k + 1)) * LogValue(sgn(k) * C(n, k) * p.T(k) / R(n - k + 1));
            });
        },
        [](const Assignment& a) {
            const Pair p(a);
            const Int n = a.i("n");
            return sum(0, n, [&](Int k) {
                const Rational w = sgn(n - k - p.s) * C(n, k) * p.Xmixed(k) / pw(p.lt, k) / R(n - k + 1);
                return w - w / R(n - k + 1);
            });
        });
    may1.readings.push_back({"tk-s", may1.lhs, [](const Assignment& a) {
                                 const Pair p(a);
                                 const Int n = a.i("n");
                                 return sum(0, n, [&](Int k) {
                                     const Rational w = sgn(n - k - p.s) * C(n, k) * p.XL(k) / R(n - k + 1);
                                     return w - w / R(n - k + 1);
                                 });
                             }});
    v.push_back(std::move(may1));

    v.push_back(make(
        "gq-cor-odd", kFamily, R"a(go14: "(1-O_r)\left(G_0L_{tn-s}-G_{tn-s}\right)")a",
        with_st({n_nonneg(), p_int("r", ">= 0", r_int)}), at_least("r", 0),
        [](const Assignment& a) {
            const Pair p(a);
            return odd_left(a.i("n"), a.i("r"), 0, [&](Int k) { return p.T(k); });
        },
        [](const Assignment& a) {
            const Pair p(a);
            const Int n = a.i("n"), r = a.i("r");
            return odd_right(n, r, p.s, [&](Int k) { return p.XL(k); }) +
                   LogValue(sgn(p.s) / pw(R(r + 1), 2) * C(2 * r, r) * (1 - O(r)) * p.XL(n));
        }));

    v.push_back(make(
        "gq-cor-odd-part", kFamily, R"a(may10: "O_{n-k}G_{tk+s}")a", with_st({n_nonneg()}), nullptr,
        [](const Assignment& a) {
            const Pair p(a);
            return odd_part_left(a.i("n"), [&](Int k) { return p.T(k); });
        },
        [](const Assignment& a) {
            const Pair p(a);
            return odd_part_right(a.i("n"), p.s, [&](Int k) { return p.XL(k); });
        }));

    v.push_back(make(
        "gq-thm2", kFamily, R"a(gooday100: "H_{m+n-k}-H_{r+m+n-k+1}")a",
        with_st({n_nonneg(), p_half("m", "in Z/2, not a negative integer", m_samples),
                 p_half("r", "in Z/2, not a negative integer", halves({0, 2, 4, 6}))}),
        not_negative_integers({"m", "r"}),
        [](const Assignment& a) {
            const Pair p(a);
            return gq_left(a.i("n"), a.q("m"), a.q("r"), [&](Int k) { return p.tau(k); });
        },
        [](const Assignment& a) {
            const Pair p(a);
            return gq_right(a.i("n"), a.q("m"), a.q("r"), [&](Int k) { return p.T(k); });
        }));

    v.push_back(make(
        "gq-cor2-m0", kFamily, R"a(go130: "\left(1-H_{r+n-k+1}\right)")a",
        with_st({n_nonneg(), p_half("r", "in Z/2, not a negative integer", halves({0, 2, 4, 6, -1, 1}))}),
        not_negative_integer("r"),
        [](const Assignment& a) {
            const Pair p(a);
            const Int n = a.i("n");
            const Rational r = a.q("r");
            return sum(0, n, [&](Int k) {
                return m0_weight(n, k, r) * LogValue(sgn(k - p.s) * C(n, k) * p.XL(k));
            });
        },
        [](const Assignment& a) {
            const Pair p(a);
            const Int n = a.i("n");
            const Rational r = a.q("r");
            const Rational r1 = inv(r + 1, "r + 1");
            return sum(0, n, [&](Int k) {
                const Rational top = r + R(n - k + 1);
                const Rational w = r1 * sgn(n - k) * C(n, k) * Cinv(top, r + 1) * p.T(k);
                return (H(n - k) - H(top) + LogValue(1)) * LogValue(w);
            });
        }));

    IdentityEntry may117 = make(
        "gq-cor2-m0-part", kFamily, R"a(may117: "(1-H_{n-k+1})")a", with_st({n_nonneg()}), nullptr,
        [](const Assignment& a) {
            const Pair p(a);
            const Int n = a.i("n");
            return sum(0, n, [&](Int k) {
                return (LogValue(1) - H(n - k + 1)) *
                       LogValue(sgn(k) * C(n, k) * p.Xmixed(k) / pw(p.lt, k) / R(n - k + 1));
            });
        },
        [](const Assignment& a) {
            const Pair p(a);
            const Int n = a.i("n");
            return sum(0, n, [&](Int k) {
                const Rational w = sgn(n - k - p.s) * C(n, k) * p.T(k) / R(n - k + 1);
                return w - w / R(n - k + 1);
            });
        });
    may117.readings.push_back({"tk-s",
                               [](const Assignment& a) {
                                   const Pair p(a);
                                   const Int n = a.i("n");
                                   return sum(0, n, [&](Int k) {
                                       return (LogValue(1) - H(n - k + 1)) *
                                              LogValue(sgn(k) * C(n, k) * p.XL(k) / R(n - k + 1));
                                   });
                               },
                               may117.rhs});
    v.push_back(std::move(may117));

    v.push_back(make(
        "gq-cor2-odd", kFamily, R"a(go140: "(1-O_r)G_{tn+s}")a", with_st({n_nonneg(), p_int("r", ">= 0", r_int)}),
        at_least("r", 0),
        [](const Assignment& a) {
            const Pair p(a);
            return odd_left(a.i("n"), a.i("r"), -p.s, [&](Int k) { return p.XL(k); });
        },
        [](const Assignment& a) {
            const Pair p(a);
            const Int n = a.i("n"), r = a.i("r");
            return odd_right(n, r, 0, [&](Int k) { return p.T(k); }) +
                   LogValue(sgn(p.s) / pw(R(r + 1), 2) * C(2 * r, r) * (1 - O(r)) * p.T(n));
        }));

    v.push_back(make(
        "gq-cor2-odd-part", kFamily, R"a(may10: "O_{n-k}\left(G_0L_{tk-s}")a", with_st({n_nonneg()}), nullptr,
        [](const Assignment& a) {
            const Pair p(a);
            return odd_part_left(a.i("n"), [&](Int k) { return p.XL(k); });
        },
        [](const Assignment& a) {
            const Pair p(a);
            return odd_part_right(a.i("n"), p.s, [&](Int k) { return p.T(k); });
        }));

    return v;
}

}  // namespace fibharm::catalog
