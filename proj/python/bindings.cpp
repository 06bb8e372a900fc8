#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dncheck/campaign.hpp"
#include "dncheck/errors.hpp"
#include "dncheck/exact.hpp"
#include "dncheck/ntheory.hpp"
#include "dncheck/sequences.hpp"

namespace py = pybind11;
using namespace dncheck;

namespace {

SmallRational to_rational(const py::handle& obj) {
    if (py::isinstance<py::str>(obj)) {
        auto parsed = SmallRational::parse(obj.cast<std::string>());
        if (!parsed) throw UsageError("bad rational " + obj.cast<std::string>());
        return *parsed;
    }
    if (py::isinstance<py::tuple>(obj)) {
        auto t = obj.cast<std::pair<i64, i64>>();
        auto parsed = SmallRational::parse(std::to_string(t.first) + "/" + std::to_string(t.second));
        if (!parsed) throw UsageError("bad rational");
        return *parsed;
    }
    return SmallRational{obj.cast<i64>(), 1};
}

std::vector<SmallRational> to_rationals(const std::optional<py::list>& xs) {
    std::vector<SmallRational> out;
    if (!xs) return out;
    for (const auto& x : *xs) out.push_back(to_rational(x));
    return out;
}

StatementId to_statement(const std::string& name) {
    auto id = parse_statement(name);
    if (!id) throw UsageError("unknown statement " + name);
    return *id;
}

py::dict to_dict(const VerificationRecord& r) {
    py::dict d;
    d["statement"] = std::string(to_string(r.statement));
    d["p"] = r.p;
    d["e"] = r.e;
    d["lhs"] = r.lhs ? py::cast(*r.lhs) : py::none();
    d["rhs"] = r.rhs ? py::cast(*r.rhs) : py::none();
    d["ok"] = r.ok;
    d["out_of_domain"] = r.out_of_domain;
    d["note"] = r.note;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact verification of congruences for sums of squared Delannoy polynomials";

    py::register_exception<Error>(m, "DncheckError", PyExc_ValueError);

    m.def("sieve_primes", &sieve_primes, py::arg("lo"), py::arg("hi"));
    m.def("legendre", &legendre, py::arg("a"), py::arg("q"));
    m.def("sqrt_mod", &sqrt_mod, py::arg("a"), py::arg("q"));
    m.def(
        "two_squares",
        [](u64 p) {
            auto ts = two_squares(p);
            return std::make_pair(ts.x, ts.y);
        },
        py::arg("p"), "(x, y) with p = x^2 + y^2, x = 1 (mod 4), y even and positive.");

    m.def(
        "binom_valuated",
        [](u64 n, i64 k, u64 p, int e) -> py::object {
            auto v = binom_valuated(n, k, Modulus(p, e));
            if (v.is_exact_zero()) return py::none();
            return py::make_tuple(v.valuation(), v.unit());
        },
        py::arg("n"), py::arg("k"), py::arg("p"), py::arg("e") = 1,
        "(valuation, unit) of C(n, k) mod p^e, or None for an exact zero.");
    m.def(
        "d_sequence",
        [](const py::object& x, u64 p, int e, u64 n) {
            const Modulus mod(p, e);
            const auto r = to_rational(x);
            return d_sequence(embed_rational(r.num, r.den, mod), n).raw();
        },
        py::arg("x"), py::arg("p"), py::arg("e"), py::arg("n"));
    m.def(
        "central_ratio_sequence", [](u64 n, u64 p, int e) { return central_ratio_sequence(n, Modulus(p, e)).raw(); },
        py::arg("n"), py::arg("p"), py::arg("e") = 1);
    m.def(
        "lhs_sum",
        [](const py::object& x, u64 p, int e) {
            const auto r = to_rational(x);
            return lhs_sum(r.num, r.den, Modulus(p, e)).value();
        },
        py::arg("x"), py::arg("p"), py::arg("e") = 1,
        "sum_{k<p} C(2k,k)/4^k d_k(x)^2 mod p^e; x as 'a/b', (a, b) or int.");
    m.def(
        "residue_index",
        [](const py::object& x, u64 p) {
            const auto r = to_rational(x);
            return residue_index(r.num, r.den, p);
        },
        py::arg("x"), py::arg("p"));

    m.def(
        "verify",
        [](const std::string& statement, u64 p, std::optional<py::list> xs) {
            auto args = to_rationals(xs);
            if (args.empty()) args = default_arguments();
            py::list out;
            for (const auto& r : verify_statement(to_statement(statement), p, args)) out.append(to_dict(r));
            return out;
        },
        py::arg("statement"), py::arg("p"), py::arg("xs") = py::none(),
        "Records for one statement at one prime; domain violations become out-of-domain records.");

    m.def(
        "campaign",
        [](const std::vector<std::string>& statements, u64 pmin, u64 pmax, std::optional<py::list> xs,
           unsigned threads, const std::string& format) {
            CampaignConfig cfg;
            for (const auto& s : statements) cfg.statements.push_back(to_statement(s));
            cfg.pmin = pmin;
            cfg.pmax = pmax;
            cfg.xs = to_rationals(xs);
            cfg.threads = threads;
            auto f = parse_format(format);
            if (!f) throw UsageError("unknown format " + format);
            std::vector<VerificationRecord> records;
            {
                py::gil_scoped_release release;
                records = collect_records(cfg);
            }
            std::vector<std::string> lines;
            for (const auto& r : records) lines.push_back(emit_record(r, *f));
            return lines;
        },
        py::arg("statements"), py::arg("pmin"), py::arg("pmax"), py::arg("xs") = py::none(), py::arg("threads") = 1,
        py::arg("format") = "jsonl", "Serialized records in (p, statement) order.");

    m.def(
        "identity_suite",
        [](long nmax, long jmax, long mmax) {
            std::vector<std::tuple<std::string, long, long>> out;
            for (const auto& c : run_identity_suite(nmax, jmax, mmax)) out.emplace_back(c.name, c.cases, c.passed);
            return out;
        },
        py::arg("nmax") = 20, py::arg("jmax") = 50, py::arg("mmax") = 60);

    m.attr("STATEMENTS") = [] {
        std::vector<std::string> names;
        for (auto id : kAllStatements) names.emplace_back(to_string(id));
        return names;
    }();
}
