#include "fibharm/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "fibharm/errors.hpp"
#include "fibharm/oracle.hpp"
#include "json.hpp"

namespace fibharm {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    for (;;) {
        const auto pos = s.find(sep);
        out.push_back(trim(s.substr(0, pos)));
        if (pos == std::string_view::npos) return out;
        s.remove_prefix(pos + 1);
    }
}

// Values of one override token for a parameter of the given kind.
std::vector<ParamValue> resolve(const ParamSpec& spec, const std::string& token) {
    std::vector<ParamValue> out;
    for (auto item : split(token, '|')) {
        if (item.empty()) throw ParseError("empty value for '" + spec.name + "'");
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(parse_value(spec.kind, item));
            continue;
        }
        if (spec.kind == ParamKind::Seed) throw ParseError("ranges are not allowed for seed '" + spec.name + "'");
        const auto lo = parse_value(spec.kind, trim(item.substr(0, dots)));
        const auto hi = parse_value(spec.kind, trim(item.substr(dots + 2)));
        auto as_q = [](const ParamValue& v) {
            if (const auto* i = std::get_if<std::int64_t>(&v)) return Rational(static_cast<long>(*i));
            if (const auto* h = std::get_if<HalfInt>(&v)) return h->to_rational();
            return std::get<Rational>(v);
        };
        const Rational a = as_q(lo), b = as_q(hi);
        if (b < a) throw ParseError("empty range '" + std::string(item) + "' for '" + spec.name + "'");
        if ((b - a).num() > 100000) throw ParseError("range '" + std::string(item) + "' is too large");
        for (Rational x = a; x <= b; x = x + Rational(1)) {
            switch (spec.kind) {
                case ParamKind::Int: out.emplace_back(std::int64_t{x.num().get_si()}); break;
                case ParamKind::HalfInt: out.emplace_back(HalfInt::from_rational(x)); break;
                default: out.emplace_back(x); break;
            }
        }
    }
    return out;
}

int compare_values(const ParamValue& a, const ParamValue& b) {
    if (const auto* sa = std::get_if<GibonacciSeed>(&a)) {
        const auto& sb = std::get<GibonacciSeed>(b);
        if (sa->g0() != sb.g0()) return sa->g0() < sb.g0() ? -1 : 1;
        if (sa->g1() != sb.g1()) return sa->g1() < sb.g1() ? -1 : 1;
        return 0;
    }
    auto q = [](const ParamValue& v) {
        if (const auto* i = std::get_if<std::int64_t>(&v)) return Rational(static_cast<long>(*i));
        if (const auto* h = std::get_if<HalfInt>(&v)) return h->to_rational();
        return std::get<Rational>(v);
    };
    const Rational x = q(a), y = q(b);
    if (x == y) return 0;
    return x < y ? -1 : 1;
}

int compare(const IdentityEntry& entry, const Assignment& a, const Assignment& b) {
    for (const auto& p : entry.params.params) {
        if (int c = compare_values(a.get(p.name), b.get(p.name))) return c;
    }
    return 0;
}

void check_override_names(const std::vector<const IdentityEntry*>& entries, const GridSpec& grid) {
    for (const auto& [name, token] : grid.overrides) {
        (void)token;
        const bool used = std::any_of(entries.begin(), entries.end(), [&](const IdentityEntry* e) {
            return std::any_of(e->params.params.begin(), e->params.params.end(),
                               [&](const ParamSpec& p) { return p.name == name; });
        });
        if (!used) throw ParseError("no selected identity has a parameter '" + name + "'");
    }
}

std::vector<const IdentityEntry*> select(const std::vector<std::string>& ids) {
    std::vector<const IdentityEntry*> out;
    std::set<std::string> seen;
    for (const auto& id : ids) {
        if (seen.insert(id).second) out.push_back(&lookup(id));
    }
    std::sort(out.begin(), out.end(), [](const auto* a, const auto* b) { return a->id < b->id; });
    return out;
}

// Runs fn(i) for i in [0, count) on `jobs` threads. `skip(i)` lets workers
// drop indices that can no longer matter. The exception of the lowest failing
// index is rethrown.
template <class Fn, class Skip>
void parallel_for(std::size_t count, int jobs, Fn fn, Skip skip) {
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t failed_at = count;
    std::exception_ptr failure;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            if (skip(i)) continue;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(mu);
                if (i < failed_at) {
                    failed_at = i;
                    failure = std::current_exception();
                }
            }
        }
    };
    const std::size_t n_threads = std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(count, 1));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
}

template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn fn) {
    parallel_for(count, jobs, fn, [](std::size_t) { return false; });
}

}  // namespace

void parse_overrides(std::string_view text, GridSpec& into) {
    for (auto part : split(text, ',')) {
        if (part.empty()) continue;
        const auto eq = part.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == part.size()) {
            throw ParseError("expected name=value, got '" + std::string(part) + "'");
        }
        into.overrides[std::string(trim(part.substr(0, eq)))] = std::string(trim(part.substr(eq + 1)));
    }
}

bool assignment_less(const IdentityEntry& entry, const Assignment& a, const Assignment& b) {
    return compare(entry, a, b) < 0;
}

std::vector<Assignment> enumerate_grid(const IdentityEntry& entry, const GridSpec& grid) {
    const auto& params = entry.params.params;
    std::vector<Assignment> out;
    Assignment prefix;
    auto rec = [&](auto& self, std::size_t depth) -> void {
        if (depth == params.size()) {
            if (!entry.params.constraint || !entry.params.constraint(prefix)) out.push_back(prefix);
            return;
        }
        const ParamSpec& p = params[depth];
        const auto it = grid.overrides.find(p.name);
        const auto values = it != grid.overrides.end() ? resolve(p, it->second) : p.samples(prefix, grid.context);
        for (const auto& v : values) {
            Assignment next = prefix;
            next.set(p.name, v);
            std::swap(prefix, next);
            self(self, depth + 1);
            std::swap(prefix, next);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [&](const Assignment& a, const Assignment& b) { return compare(entry, a, b) < 0; });
    out.erase(std::unique(out.begin(), out.end(),
                          [&](const Assignment& a, const Assignment& b) { return compare(entry, a, b) == 0; }),
              out.end());
    return out;
}

Assignment parse_assignment(const IdentityEntry& entry, std::string_view text) {
    Assignment a;
    for (auto part : split(text, ',')) {
        if (part.empty()) continue;
        const auto eq = part.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected name=value, got '" + std::string(part) + "'");
        const std::string name(trim(part.substr(0, eq)));
        const ParamSpec& spec = [&]() -> const ParamSpec& {
            try {
                return entry.params.spec(name);
            } catch (const BadAssignment&) {
                throw BadAssignment("'" + entry.id + "' has no parameter '" + name + "'");
            }
        }();
        a.set(name, parse_value(spec.kind, trim(part.substr(eq + 1))));
    }
    // keep the schema order so renderings are canonical
    Assignment ordered;
    for (const auto& p : entry.params.params) {
        if (a.has(p.name)) ordered.set(p.name, a.get(p.name));
    }
    return ordered;
}

std::vector<SweepSummary> sweep(const std::vector<std::string>& ids, const GridSpec& grid,
                                const SweepOptions& options) {
    const auto entries = select(ids);
    check_override_names(entries, grid);
    std::vector<SweepSummary> out;
    for (const IdentityEntry* entry : entries) {
        const auto start = std::chrono::steady_clock::now();
        const auto points = enumerate_grid(*entry, grid);
        EvalOptions eval;
        eval.mutate_rhs = std::find(options.mutate_rhs.begin(), options.mutate_rhs.end(), entry->id) !=
                          options.mutate_rhs.end();

        std::vector<CheckReport> reports(points.size());
        std::atomic<std::size_t> first_unequal{points.size()};
        parallel_for(
            points.size(), options.jobs,
            [&](std::size_t i) {
                reports[i] = evaluate(*entry, points[i], eval);
                if (reports[i].outcome == Outcome::Unequal && options.stop_at_first_unequal) {
                    std::size_t cur = first_unequal.load();
                    while (i < cur && !first_unequal.compare_exchange_weak(cur, i)) {
                    }
                }
            },
            [&](std::size_t i) { return options.stop_at_first_unequal && i > first_unequal.load(); });
        if (options.stop_at_first_unequal && first_unequal.load() < points.size()) {
            reports.resize(first_unequal.load() + 1);
        }

        SweepSummary s;
        s.id = entry->id;
        s.family = entry->family;
        s.anchor = entry->anchor;
        for (auto& r : reports) {
            switch (r.outcome) {
                case Outcome::Equal: ++s.equal; break;
                case Outcome::Unequal:
                    ++s.unequal;
                    if (!s.first_counterexample) s.first_counterexample = r;
                    break;
                case Outcome::Skipped: ++s.skipped; break;
            }
        }
        s.checked = s.equal + s.unequal;
        if (options.keep_reports) s.reports = std::move(reports);
        if (options.timing) {
            s.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                                 start)
                               .count();
        }
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

struct SideValue {
    std::optional<LogValue> value;
    std::string reason;
};

SideValue registry_side(const Evaluator& f, const Assignment& a) {
    try {
        return {f(a), {}};
    } catch (const HarmonicPole& e) {
        return {std::nullopt, e.what()};
    } catch (const DivisionByZero& e) {
        return {std::nullopt, e.what()};
    } catch (const UnsupportedBinomial& e) {
        return {std::nullopt, e.what()};
    }
}

std::string show(const SideValue& v) { return v.value ? v.value->to_string() : "undefined (" + v.reason + ")"; }

// Compares registry and oracle on one side at one point.
void cross_check(const std::string& key, const char* side, const Assignment& a, const SideValue& reg,
                 const oracle::Value& orc) {
    const bool same = reg.value.has_value() == orc.value.has_value() && (!reg.value || *reg.value == *orc.value);
    if (same) return;
    SideValue o{orc.value, orc.undefined_reason};
    throw EncodingBug(key + " " + side + " at " + a.to_string() + ": registry " + show(reg) + ", oracle " + show(o));
}

struct PointResult {
    Outcome outcome = Outcome::Skipped;
    std::string lhs, rhs;
};

// Audits one (lhs, rhs) pair; returns per-point outcomes in grid order.
std::vector<PointResult> audit_pair(const std::string& key, const Evaluator& lhs, const Evaluator& rhs,
                                    const std::vector<Assignment>& points, int jobs) {
    const oracle::Formula* f = oracle::formula_for(key);
    if (!f) throw EncodingBug("no oracle formula for " + key);
    std::vector<PointResult> out(points.size());
    parallel_for(points.size(), jobs, [&](std::size_t i) {
        const Assignment& a = points[i];
        const SideValue l = registry_side(lhs, a);
        cross_check(key, "lhs", a, l, oracle::eval(f->lhs, a));
        const SideValue r = registry_side(rhs, a);
        cross_check(key, "rhs", a, r, oracle::eval(f->rhs, a));
        PointResult& p = out[i];
        if (l.value && r.value) {
            p.outcome = *l.value == *r.value ? Outcome::Equal : Outcome::Unequal;
            p.lhs = l.value->to_string();
            p.rhs = r.value->to_string();
        }
    });
    return out;
}

}  // namespace

AuditResult audit_entry(const IdentityEntry& entry, const GridSpec& grid, int jobs) {
    const auto points = enumerate_grid(entry, grid);
    AuditResult res;
    res.id = entry.id;
    res.points = static_cast<std::int64_t>(points.size());

    const auto primary = audit_pair(entry.id, entry.lhs, entry.rhs, points, jobs);
    res.status.confirmed = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (primary[i].outcome == Outcome::Skipped) ++res.skipped;
        if (primary[i].outcome == Outcome::Unequal && res.status.confirmed) {
            res.status.confirmed = false;
            res.status.counterexample = Counterexample{points[i].to_string(), primary[i].lhs, primary[i].rhs};
        }
    }
    for (const auto& reading : entry.readings) {
        const auto pts = audit_pair(entry.id + "[" + reading.name + "]", reading.lhs, reading.rhs, points, jobs);
        const bool any_checked =
            std::any_of(pts.begin(), pts.end(), [](const PointResult& p) { return p.outcome != Outcome::Skipped; });
        const bool refuted =
            std::any_of(pts.begin(), pts.end(), [](const PointResult& p) { return p.outcome == Outcome::Unequal; });
        if (any_checked && !refuted) res.status.surviving_readings.push_back(reading.name);
        else res.refuted_readings.push_back(reading.name);
    }
    return res;
}

std::vector<AuditResult> audit(const std::vector<std::string>& ids, const GridSpec& grid, int jobs) {
    const auto entries = select(ids);
    check_override_names(entries, grid);
    std::vector<AuditResult> out;
    for (const IdentityEntry* e : entries) out.push_back(audit_entry(*e, grid, jobs));
    return out;
}

std::string audited_status_json(const std::vector<AuditResult>& results) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::object();
    auto sorted = results;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& r : sorted) {
        nlohmann::ordered_json e;
        e["status"] = r.status.confirmed ? "ConfirmedPass" : "Discrepancy";
        if (r.status.counterexample) {
            e["counterexample"] = {{"assignment", r.status.counterexample->assignment},
                                   {"lhs", r.status.counterexample->lhs},
                                   {"rhs", r.status.counterexample->rhs}};
        } else {
            e["counterexample"] = nullptr;
        }
        e["surviving_readings"] = r.status.surviving_readings;
        e["refuted_readings"] = r.refuted_readings;
        e["points"] = r.points;
        e["skipped"] = r.skipped;
        entries[r.id] = std::move(e);
    }
    nlohmann::ordered_json doc;
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

Verdict judge(const std::vector<SweepSummary>& summaries, const SweepOptions& options) {
    Verdict v;
    for (const auto& s : summaries) {
        const IdentityEntry& entry = lookup(s.id);
        const auto status = entry.status();
        if (!status || status->confirmed) {
            if (s.unequal > 0) {
                v.problems.push_back(s.id + ": " + std::to_string(s.unequal) + " unequal point(s), first at " +
                                     s.first_counterexample->assignment +
                                     (status ? "" : " (never audited)"));
            }
            continue;
        }
        const auto& ce = status->counterexample;
        if (!ce) {
            v.problems.push_back(s.id + ": Discrepancy without a stored counterexample");
            continue;
        }
        EvalOptions eval;
        eval.mutate_rhs = std::find(options.mutate_rhs.begin(), options.mutate_rhs.end(), s.id) !=
                          options.mutate_rhs.end();
        const CheckReport r = evaluate(entry, parse_assignment(entry, ce->assignment), eval);
        const bool reproduced = r.outcome == Outcome::Unequal && r.lhs->to_string() == ce->lhs &&
                                r.rhs->to_string() == ce->rhs;
        if (!reproduced) {
            v.problems.push_back(s.id + ": stored counterexample at " + ce->assignment + " did not reproduce (got " +
                                 std::string(to_string(r.outcome)) + ")");
        }
    }
    v.exit_code = v.problems.empty() ? 0 : 1;
    return v;
}

}  // namespace fibharm
