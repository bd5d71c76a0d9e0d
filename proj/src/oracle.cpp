#include "fibharm/oracle.hpp"

#include <gmpxx.h>

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "fibharm/errors.hpp"

namespace fibharm::oracle {

namespace {

// a + b ln2
struct V {
    mpq_class a, b;
};

struct Undefined {
    std::string why;
};

V add(const V& x, const V& y) { return {x.a + y.a, x.b + y.b}; }
V sub(const V& x, const V& y) { return {x.a - y.a, x.b - y.b}; }

V mul(const V& x, const V& y) {
    if (x.b != 0 && y.b != 0) throw EncodingBug("oracle: ln2^2 term");
    return {x.a * y.a, x.a * y.b + x.b * y.a};
}

V div(const V& x, const V& y) {
    if (y.b != 0) throw EncodingBug("oracle: division by a value containing ln2");
    if (y.a == 0) throw Undefined{"division by zero"};
    return {x.a / y.a, x.b / y.a};
}

const mpq_class& rational(const V& v, const char* what) {
    if (v.b != 0) throw EncodingBug(std::string("oracle: ") + what + " argument contains ln2");
    return v.a;
}

long integer(const V& v, const char* what) {
    const mpq_class& q = rational(v, what);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
        throw EncodingBug(std::string("oracle: ") + what + " needs an integer argument");
    }
    return q.get_num().get_si();
}

// --- naive number theory ------------------------------------------------------

mpz_class gibonacci(const mpz_class& g0, const mpz_class& g1, long j) {
    mpz_class prev = g0, cur = g1;  // G_0, G_1
    if (j == 0) return g0;
    if (j > 0) {
        for (long i = 1; i < j; ++i) {
            mpz_class next = prev + cur;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    // walk down: G_{i-1} = G_{i+1} - G_i
    for (long i = 0; i > j; --i) {
        mpz_class lower = cur - prev;
        cur = prev;
        prev = lower;
    }
    return prev;
}

mpq_class odd_sum(long n) {
    mpq_class acc = 0;
    for (long j = 1; j <= n; ++j) acc += mpq_class(1, 2 * j - 1);
    return acc;
}

V harmonic_at(const mpq_class& z) {
    if (z.get_den() == 1) {
        const long n = z.get_num().get_si();
        if (n < 0) throw Undefined{"H at negative integer " + std::to_string(n)};
        mpq_class acc = 0;
        for (long j = 1; j <= n; ++j) acc += mpq_class(1, j);
        return {acc, 0};
    }
    if (z.get_den() != 2) throw Undefined{"H at " + z.get_str()};
    // z = m - 1/2
    const mpq_class shifted = z + mpq_class(1, 2);
    const long m = shifted.get_num().get_si();
    if (m >= 0) return {2 * odd_sum(m), -2};
    V h = harmonic_at(z + 1);  // H_z = H_{z+1} - 1/(z+1)
    h.a -= 1 / (z + 1);
    return h;
}

mpq_class falling_binomial(const mpq_class& u, long k) {
    mpq_class num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= u - i;
        den *= i + 1;
    }
    return num / den;
}

bool is_int(const mpq_class& q) { return q.get_den() == 1; }

mpq_class binomial(const mpq_class& u, const mpq_class& l) {
    if (is_int(l)) {
        const long k = l.get_num().get_si();
        if (k < 0) return 0;
        return falling_binomial(u, k);
    }
    const mpq_class d = u - l;
    if (is_int(d)) {
        const long dk = d.get_num().get_si();
        if (dk >= 0) return falling_binomial(u, dk);
        if (!is_int(u)) return 0;  // Gamma(u-l+1) has a pole
    }
    throw Undefined{"binomial C(" + u.get_str() + ", " + l.get_str() + ")"};
}

// --- parser -------------------------------------------------------------------

struct Node;
using NodeP = std::unique_ptr<Node>;

struct Node {
    enum Kind { Num, Var, Ln2, Neg, Add, Sub, Mul, Div, Pow, Call, Sum, Prod } kind;
    mpq_class num;
    std::string name;
    std::vector<NodeP> kids;
};

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    NodeP parse() {
        NodeP e = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    std::string_view s_;
    size_t i_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw EncodingBug("oracle formula: " + what + " at offset " + std::to_string(i_) + " in '" +
                          std::string(s_) + "'");
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    static NodeP make(Node::Kind k, NodeP a = nullptr, NodeP b = nullptr) {
        auto n = std::make_unique<Node>();
        n->kind = k;
        if (a) n->kids.push_back(std::move(a));
        if (b) n->kids.push_back(std::move(b));
        return n;
    }

    NodeP expr() {
        NodeP lhs = term();
        for (;;) {
            if (eat('+')) lhs = make(Node::Add, std::move(lhs), term());
            else if (eat('-')) lhs = make(Node::Sub, std::move(lhs), term());
            else return lhs;
        }
    }

    NodeP term() {
        NodeP lhs = unary();
        for (;;) {
            if (eat('*')) lhs = make(Node::Mul, std::move(lhs), unary());
            else if (eat('/')) lhs = make(Node::Div, std::move(lhs), unary());
            else return lhs;
        }
    }

    NodeP unary() {
        if (eat('-')) return make(Node::Neg, unary());
        return power();
    }

    NodeP power() {
        NodeP base = primary();
        if (eat('^')) return make(Node::Pow, std::move(base), unary());
        return base;
    }

    std::string ident() {
        skip();
        size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        if (start == i_) fail("expected a name");
        return std::string(s_.substr(start, i_ - start));
    }

    NodeP primary() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        if (eat('(')) {
            NodeP e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            auto n = make(Node::Num);
            n->num = mpq_class(std::string(s_.substr(start, i_ - start)));
            return n;
        }
        std::string id = ident();
        if (id == "ln2") return make(Node::Ln2);
        if (!eat('(')) {
            auto n = make(Node::Var);
            n->name = id;
            return n;
        }
        if (id == "sum" || id == "prod") {
            auto n = make(id == "sum" ? Node::Sum : Node::Prod);
            n->name = ident();
            expect(',');
            n->kids.push_back(expr());
            expect(',');
            n->kids.push_back(expr());
            expect(',');
            n->kids.push_back(expr());
            expect(')');
            return n;
        }
        auto n = make(Node::Call);
        n->name = id;
        n->kids.push_back(expr());
        while (eat(',')) n->kids.push_back(expr());
        expect(')');
        return n;
    }
};

// --- interpreter --------------------------------------------------------------

struct Env {
    std::map<std::string, mpq_class, std::less<>> vars;
    std::vector<std::pair<std::string, mpq_class>> bound;
    mpz_class g0, g1;
    bool has_seed = false;

    const mpq_class& lookup(const std::string& name) const {
        for (auto it = bound.rbegin(); it != bound.rend(); ++it) {
            if (it->first == name) return it->second;
        }
        if (auto it = vars.find(name); it != vars.end()) return it->second;
        throw EncodingBug("oracle: unbound name '" + name + "'");
    }
};

V run(const Node& n, Env& env);

V call(const Node& n, Env& env) {
    auto arg = [&](size_t i) { return run(*n.kids.at(i), env); };
    const std::string& f = n.name;
    if (n.kids.size() == 1) {
        if (f == "F") return {mpq_class(gibonacci(0, 1, integer(arg(0), "F"))), 0};
        if (f == "L") return {mpq_class(gibonacci(2, 1, integer(arg(0), "L"))), 0};
        if (f == "G") {
            if (!env.has_seed) throw EncodingBug("oracle: G without a seed");
            return {mpq_class(gibonacci(env.g0, env.g1, integer(arg(0), "G"))), 0};
        }
        if (f == "H") return harmonic_at(rational(arg(0), "H"));
        if (f == "O") {
            const long j = integer(arg(0), "O");
            if (j < 0) throw Undefined{"O at negative index"};
            return {odd_sum(j), 0};
        }
        if (f == "even") return {integer(arg(0), "even") % 2 == 0 ? 1 : 0, 0};
        if (f == "odd") return {integer(arg(0), "odd") % 2 != 0 ? 1 : 0, 0};
    }
    if (f == "C" && n.kids.size() == 2) return {binomial(rational(arg(0), "C"), rational(arg(1), "C")), 0};
    throw EncodingBug("oracle: unknown function " + f + "/" + std::to_string(n.kids.size()));
}

V run(const Node& n, Env& env) {
    switch (n.kind) {
        case Node::Num: return {n.num, 0};
        case Node::Var: return {env.lookup(n.name), 0};
        case Node::Ln2: return {0, 1};
        case Node::Neg: {
            V v = run(*n.kids[0], env);
            return {-v.a, -v.b};
        }
        case Node::Add: return add(run(*n.kids[0], env), run(*n.kids[1], env));
        case Node::Sub: return sub(run(*n.kids[0], env), run(*n.kids[1], env));
        case Node::Mul: return mul(run(*n.kids[0], env), run(*n.kids[1], env));
        case Node::Div: return div(run(*n.kids[0], env), run(*n.kids[1], env));
        case Node::Pow: {
            const mpq_class base = rational(run(*n.kids[0], env), "power base");
            const long e = integer(run(*n.kids[1], env), "exponent");
            if (base == 0 && e < 0) throw Undefined{"0 to a negative power"};
            mpq_class acc = 1;
            for (long i = 0; i < (e < 0 ? -e : e); ++i) acc *= base;
            return {e < 0 ? 1 / acc : acc, 0};
        }
        case Node::Call: return call(n, env);
        case Node::Sum:
        case Node::Prod: {
            const long lo = integer(run(*n.kids[0], env), "bound");
            const long hi = integer(run(*n.kids[1], env), "bound");
            V acc{n.kind == Node::Sum ? 0 : 1, 0};
            for (long k = lo; k <= hi; ++k) {
                env.bound.emplace_back(n.name, mpq_class(k));
                V term = run(*n.kids[2], env);
                env.bound.pop_back();
                acc = n.kind == Node::Sum ? add(acc, term) : mul(acc, term);
            }
            return acc;
        }
    }
    throw EncodingBug("oracle: bad node");
}

const Node& parsed(std::string_view expr) {
    static std::shared_mutex mu;
    static std::map<std::string, NodeP, std::less<>> cache;
    {
        std::shared_lock lock(mu);
        if (auto it = cache.find(expr); it != cache.end()) return *it->second;
    }
    NodeP tree = Parser(expr).parse();
    std::unique_lock lock(mu);
    auto [it, inserted] = cache.emplace(std::string(expr), std::move(tree));
    (void)inserted;
    return *it->second;
}

}  // namespace

Value eval(std::string_view expr, const Assignment& at) {
    Env env;
    for (const auto& [name, v] : at.items()) {
        if (const auto* seed = std::get_if<GibonacciSeed>(&v)) {
            env.g0 = seed->g0();
            env.g1 = seed->g1();
            env.has_seed = true;
        } else {
            env.vars.emplace(name, at.q(name).mpq());
        }
    }
    try {
        const V v = run(parsed(expr), env);
        return {LogValue(Rational::from_mpq(v.a), Rational::from_mpq(v.b)), {}};
    } catch (const Undefined& u) {
        return {std::nullopt, u.why};
    }
}

}  // namespace fibharm::oracle
