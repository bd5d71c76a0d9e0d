#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibharm/errors.hpp"
#include "fibharm/harmonic.hpp"
#include "fibharm/registry.hpp"
#include "fibharm/report.hpp"
#include "fibharm/sequences.hpp"
#include "fibharm/verifier.hpp"

namespace py = pybind11;
using namespace fibharm;

namespace {

GridSpec grid_of(const std::string& overrides, std::int64_t n_max) {
    GridSpec g;
    g.context.n_max = n_max;
    parse_overrides(overrides, g);
    return g;
}

py::object value_or_none(const std::optional<LogValue>& v) {
    return v ? py::object(py::str(v->to_string())) : py::object(py::none());
}

py::dict report_dict(const CheckReport& r) {
    py::dict d;
    d["id"] = r.id;
    d["assignment"] = r.assignment;
    d["lhs"] = value_or_none(r.lhs);
    d["rhs"] = value_or_none(r.rhs);
    d["outcome"] = std::string(to_string(r.outcome));
    d["skip_reason"] = r.skip_reason;
    return d;
}

py::int_ big(const BigInt& v) { return py::int_(py::str(v.get_str())); }

}  // namespace

PYBIND11_MODULE(_fibharm, m) {
    m.doc() = "Exact verification of Fibonacci-harmonic summation identities";

    // Later registrations are tried first, so the subclasses go after the base.
    auto& base = py::register_exception<Error>(m, "FibharmError");
    py::register_exception<NotFound>(m, "NotFound", PyExc_KeyError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BadAssignment>(m, "BadAssignment", PyExc_ValueError);
    py::register_exception<EncodingBug>(m, "EncodingBug", base.ptr());

    m.attr("__version__") = kToolVersion;

    m.def("fibonacci", [](std::int64_t j) { return big(fib(j)); }, py::arg("j"));
    m.def("lucas", [](std::int64_t j) { return big(lucas(j)); }, py::arg("j"));
    m.def(
        "harmonic", [](const std::string& z) { return harmonic(HalfInt::parse(z)).to_string(); }, py::arg("z"),
        "H_z for an integer or half-integer z, rendered exactly.");
    m.def(
        "binomial",
        [](const std::string& u, const std::string& l) {
            return binom_general(Rational::parse(u), Rational::parse(l)).to_string();
        },
        py::arg("upper"), py::arg("lower"));

    m.def("families", &registry_families);
    m.def("identities", [] {
        py::list out;
        for (const auto& e : registry_entries()) {
            py::dict d;
            d["id"] = e.id;
            d["family"] = e.family;
            d["anchor"] = e.anchor;
            d["schema"] = e.params.describe();
            const auto st = e.status();
            d["status"] = !st ? "unaudited" : st->confirmed ? "ConfirmedPass" : "Discrepancy";
            out.append(d);
        }
        return out;
    });

    m.def(
        "evaluate",
        [](const std::string& id, const std::string& assignment) {
            const auto& e = lookup(id);
            return report_dict(evaluate(e, parse_assignment(e, assignment)));
        },
        py::arg("id"), py::arg("assignment"), "Evaluate both sides at 'n=3,r=0,seed=0:1'.");

    m.def(
        "sweep",
        [](const std::vector<std::string>& ids, const std::string& overrides, std::int64_t n_max, int jobs) {
            SweepOptions o;
            o.jobs = jobs;
            std::vector<SweepSummary> s;
            {
                py::gil_scoped_release release;
                s = sweep(ids, grid_of(overrides, n_max), o);
            }
            py::list out;
            for (const auto& x : s) {
                py::dict d;
                d["id"] = x.id;
                d["family"] = x.family;
                d["checked"] = x.checked;
                d["equal"] = x.equal;
                d["unequal"] = x.unequal;
                d["skipped"] = x.skipped;
                d["first_counterexample"] =
                    x.first_counterexample ? py::object(report_dict(*x.first_counterexample)) : py::object(py::none());
                out.append(d);
            }
            return out;
        },
        py::arg("ids"), py::arg("overrides") = "", py::arg("n_max") = 24, py::arg("jobs") = 1);

    m.def(
        "verify_report",
        [](const std::vector<std::string>& ids, const std::string& overrides, std::int64_t n_max, bool verbose) {
            const GridSpec g = grid_of(overrides, n_max);
            SweepOptions o;
            o.keep_reports = verbose;
            py::gil_scoped_release release;
            return report_json(sweep(ids, g, o), g, verbose);
        },
        py::arg("ids"), py::arg("overrides") = "", py::arg("n_max") = 24, py::arg("verbose") = false,
        "JSON report text, as written by `fibharm verify`.");

    m.def(
        "audit",
        [](const std::vector<std::string>& ids, const std::string& overrides, std::int64_t n_max) {
            std::vector<AuditResult> res;
            {
                py::gil_scoped_release release;
                res = audit(ids, grid_of(overrides, n_max));
            }
            py::list out;
            for (const auto& r : res) {
                py::dict d;
                d["id"] = r.id;
                d["status"] = r.status.confirmed ? "ConfirmedPass" : "Discrepancy";
                d["counterexample"] = r.status.counterexample ? py::object(py::str(r.status.counterexample->assignment))
                                                              : py::object(py::none());
                d["surviving_readings"] = r.status.surviving_readings;
                out.append(d);
            }
            return out;
        },
        py::arg("ids"), py::arg("overrides") = "", py::arg("n_max") = 24);
}
