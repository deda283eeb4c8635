#include "eqlines/constructions.hpp"
#include "eqlines/errors.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/graph6.hpp"
#include "eqlines/lineset.hpp"
#include "eqlines/lineset_io.hpp"
#include "eqlines/maxclique.hpp"
#include "eqlines/saturation.hpp"
#include "eqlines/span_search.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace eqlines;

namespace {

std::vector<std::vector<std::string>> gram_strings(const LineSet& ls) {
    std::vector<std::vector<std::string>> out(ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i) {
        for (std::size_t j = 0; j < ls.size(); ++j) out[i].push_back(to_string(ls.gram()(i, j)));
    }
    return out;
}

py::dict report_dict(const ValidationReport& r) {
    py::list checks;
    for (const auto& c : r.checks) {
        py::object offense = py::none();
        if (c.first_offense) offense = py::make_tuple(c.first_offense->first, c.first_offense->second);
        checks.append(py::dict("name"_a = c.name, "passed"_a = c.passed, "first_offense"_a = offense));
    }
    return py::dict("passed"_a = r.passed(), "rank"_a = r.rank, "checks"_a = checks);
}

py::dict saturation_dict(const SaturationReport& r) {
    return py::dict("basis"_a = r.basis, "candidate_count"_a = r.candidate_count,
                    "clique_number"_a = r.clique_number, "clique_exact"_a = r.clique_exact,
                    "clique_witness"_a = r.clique_witness, "upper_bound"_a = r.upper_bound,
                    "saturated"_a = r.saturated, "non_basis_lines_found"_a = r.non_basis_lines_found,
                    "non_basis_lines_form_clique"_a = r.non_basis_lines_form_clique);
}

py::dict run_dict(const SearchRun& run) {
    return py::dict("run"_a = run.run, "seed"_a = run.seed, "subset"_a = run.subset, "closure"_a = run.closure,
                    "closure_size"_a = run.closure_size, "rank"_a = run.rank);
}

SimpleGraph graph_from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    SimpleGraph g(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) throw OutOfRange("edge endpoint out of range");
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact equiangular line sets: constructions, saturation checks and span search.";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<LineSet>(m, "LineSet")
        .def(py::init([](const std::string& angle, const std::vector<std::vector<std::string>>& gram) {
                 RatMatrix g(gram.size(), gram.size());
                 for (std::size_t i = 0; i < gram.size(); ++i) {
                     if (gram[i].size() != gram.size()) throw DimensionMismatch("Gram matrix must be square");
                     for (std::size_t j = 0; j < gram.size(); ++j) g(i, j) = parse_rational(gram[i][j]);
                 }
                 return LineSet(parse_rational(angle), std::move(g));
             }),
             "angle"_a, "gram"_a)
        .def_static("from_json", &parse_lineset, "text"_a)
        .def("to_json", &serialize)
        .def("__len__", &LineSet::size)
        .def_property_readonly("angle", [](const LineSet& ls) { return to_string(ls.angle()); })
        .def_property_readonly("rank", &LineSet::rank)
        .def_property_readonly("gram", &gram_strings)
        .def("is_equiangular", &LineSet::is_equiangular)
        .def("__eq__", [](const LineSet& a, const LineSet& b) { return a == b; })
        .def("__repr__", [](const LineSet& ls) {
            return "<LineSet n=" + std::to_string(ls.size()) + " angle=" + to_string(ls.angle()) +
                   " rank=" + std::to_string(ls.rank()) + ">";
        });

    m.def("validate", [](const LineSet& ls) { return report_dict(validate(ls)); }, "lines"_a);

    m.def("tremain_28", &tremain_28);
    m.def("taylor_90", [] { return taylor_90().lines; });
    m.def("asche_72", [] { return asche_72().lines; });
    m.def("generate_octads", [] {
        std::vector<std::array<int, 8>> out;
        for (Octad o : generate_octads().octads) out.push_back(octad_points(o));
        return out;
    });
    m.def(
        "from_graph6",
        [](const std::string& text, const std::string& angle) { return from_graph6(text, parse_rational(angle)).lines; },
        "text"_a, "angle"_a);

    m.def(
        "check_saturated",
        [](const LineSet& ls, std::optional<std::vector<std::size_t>> basis, unsigned threads,
           std::optional<long> clique_budget_ms) {
            SaturationOptions opts;
            opts.enumeration.threads = threads;
            if (clique_budget_ms) opts.clique_budget = std::chrono::milliseconds(*clique_budget_ms);
            SaturationReport r;
            {
                py::gil_scoped_release release;
                r = basis ? check_saturated(ls, std::span<const std::size_t>(*basis), opts) : check_saturated(ls, std::nullopt, opts);
            }
            return saturation_dict(r);
        },
        "lines"_a, "basis"_a = py::none(), "threads"_a = 1, "clique_budget_ms"_a = py::none());

    m.def(
        "span_closure",
        [](const LineSet& ls, const std::vector<std::size_t>& subset) { return span_closure(ls, subset); },
        "lines"_a, "subset"_a);

    m.def(
        "random_search",
        [](const LineSet& ls, std::size_t rank, std::size_t runs, std::uint64_t seed, unsigned threads) {
            SearchSummary s;
            {
                py::gil_scoped_release release;
                s = random_search(ls, rank, runs, seed, {threads});
            }
            py::object best = py::none();
            if (s.best) best = run_dict(*s.best);
            return py::dict("runs"_a = s.runs, "best"_a = best, "histogram"_a = s.histogram);
        },
        "lines"_a, "rank"_a, "runs"_a, "seed"_a, "threads"_a = 1);

    m.def(
        "extract_sublineset",
        [](const LineSet& ls, const std::vector<std::size_t>& indices) { return extract_sublineset(ls, indices).lines; },
        "lines"_a, "indices"_a);

    m.def(
        "relative_bound",
        [](std::size_t r, const std::string& angle) { return to_string(relative_bound(r, parse_rational(angle))); },
        "r"_a, "angle"_a);
    m.def(
        "relative_bound_floor",
        [](std::size_t r, const std::string& angle) {
            return relative_bound_floor(r, parse_rational(angle)).get_str();
        },
        "r"_a, "angle"_a);
    m.def(
        "known_bounds",
        [](std::size_t d) {
            const BoundsEntry e = known_bounds(d);
            return std::make_pair(e.lower, e.upper);
        },
        "d"_a);

    m.def(
        "max_clique",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
            const CliqueResult r = max_clique(graph_from_edges(n, edges));
            return py::make_tuple(r.size, r.witness);
        },
        "n"_a, "edges"_a);
}
