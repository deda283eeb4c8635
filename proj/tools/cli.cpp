#include "cli.hpp"

#include "eqlines/constructions.hpp"
#include "eqlines/errors.hpp"
#include "eqlines/graph6.hpp"
#include "eqlines/lineset_io.hpp"
#include "eqlines/rng.hpp"
#include "eqlines/saturation.hpp"
#include "eqlines/span_search.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

namespace eqlines::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Invalid flag values detected after parsing; mapped to exit code 2.
class UsageError : public Error {
public:
    using Error::Error;
};

struct Options {
    bool json = false;
    unsigned threads = 0;

    std::string construct_kind;
    std::string construct_input;
    std::string output;
    std::string angle;
    std::string expect_srg;

    std::string input;

    std::string basis;
    std::string export_graph;
    std::uint64_t work_ceiling = std::uint64_t{1} << 24;
    bool force = false;
    std::int64_t clique_budget_ms = 0;

    std::size_t rank = 0;
    std::size_t runs = 0;
    std::uint64_t seed = 0;
    std::string emit_best;
    std::string csv;

    std::size_t bound_r = 0;
    std::string bound_angle;

    std::size_t info_d = 0;
};

unsigned worker_count(const Options& o) {
    if (o.threads > 0) return o.threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

Json one_based(const std::vector<std::size_t>& indices) {
    Json a = Json::array();
    for (std::size_t i : indices) a.push_back(i + 1);
    return a;
}

std::string join_one_based(const std::vector<std::size_t>& indices) {
    std::ostringstream os;
    for (std::size_t k = 0; k < indices.size(); ++k) os << (k ? "," : "") << indices[k] + 1;
    return os.str();
}

Rational parse_angle_flag(const std::string& text, const char* flag) {
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            throw UsageError("--basis: '" + item + "' is not an index");
        }
        if (used != item.size() || v == 0) throw UsageError("--basis: indices are 1-based integers, got '" + item + "'");
        out.push_back(v - 1);
    }
    if (out.empty()) throw UsageError("--basis: empty index list");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LineSet load_lineset(const std::string& path) {
    return parse_lineset(read_file(path));
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

Json validation_json(const ValidationReport& report, const LineSet& lines) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json entry{{"check", c.name}, {"passed", c.passed}};
        if (c.first_offense) entry["first_offense"] = {c.first_offense->first + 1, c.first_offense->second + 1};
        checks.push_back(std::move(entry));
    }
    return Json{{"n", lines.size()},
                {"angle", to_string(lines.angle())},
                {"rank", report.rank},
                {"passed", report.passed()},
                {"checks", std::move(checks)}};
}

void print_validation(std::ostream& out, const ValidationReport& report, const LineSet& lines) {
    out << "lines: " << lines.size() << "  angle: " << to_string(lines.angle()) << "  rank: " << report.rank
        << '\n';
    for (const auto& c : report.checks) {
        out << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.name;
        if (c.first_offense) out << "  (first at " << c.first_offense->first + 1 << ", " << c.first_offense->second + 1 << ")";
        out << '\n';
    }
    out << (report.passed() ? "valid" : "INVALID") << '\n';
}

int emit_lineset_summary(const Options& o, std::ostream& out, const LineSet& lines, const std::string& name,
                         const std::vector<std::string>& warnings = {}) {
    if (!o.output.empty()) write_lineset(o.output, lines);
    const ValidationReport report = validate(lines);
    if (o.json) {
        Json j{{"construction", name}, {"validation", validation_json(report, lines)}};
        if (!warnings.empty()) j["warnings"] = warnings;
        if (!o.output.empty()) j["output"] = o.output;
        out << j.dump(2) << '\n';
    } else {
        out << name << '\n';
        for (const auto& w : warnings) out << "warning: " << w << '\n';
        print_validation(out, report, lines);
        if (!o.output.empty()) out << "written to " << o.output << '\n';
    }
    return report.passed() ? kSuccess : kValidationFailure;
}

int construct_octads(const Options& o, std::ostream& out) {
    const OctadDesign design = generate_octads();
    std::array<std::size_t, 24> per_point{};
    std::set<int> intersections;
    for (std::size_t a = 0; a < design.octads.size(); ++a) {
        for (int p = 0; p < 24; ++p) {
            if (design.octads[a] & (1u << p)) ++per_point[p];
        }
        for (std::size_t b = a + 1; b < design.octads.size(); ++b) {
            intersections.insert(std::popcount(design.octads[a] & design.octads[b]));
        }
    }
    Json octads = Json::array();
    for (Octad oct : design.octads) octads.push_back(octad_points(oct));
    if (!o.output.empty()) write_text(o.output, Json{{"octads", octads}}.dump() + "\n");

    const auto [lo, hi] = std::minmax_element(per_point.begin(), per_point.end());
    if (o.json) {
        Json j{{"construction", "octads"},
               {"count", design.octads.size()},
               {"first", octads.front()},
               {"octads_per_point", {{"min", *lo}, {"max", *hi}}},
               {"intersection_sizes", intersections}};
        if (!o.output.empty()) j["output"] = o.output;
        out << j.dump(2) << '\n';
    } else {
        out << "octads: " << design.octads.size() << '\n';
        out << "first: " << octads.front().dump() << '\n';
        out << "octads per point: " << *lo << ".." << *hi << '\n';
        out << "intersection sizes:";
        for (int s : intersections) out << ' ' << s;
        out << '\n';
        if (!o.output.empty()) out << "written to " << o.output << '\n';
    }
    return kSuccess;
}

std::optional<SrgParameters> parse_srg(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::vector<std::size_t> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(std::stoul(item));
        } catch (const std::exception&) {
            throw UsageError("--expect-srg: expected n,k,lambda,mu");
        }
    }
    if (v.size() != 4) throw UsageError("--expect-srg: expected n,k,lambda,mu");
    return SrgParameters{v[0], v[1], v[2], v[3]};
}

int cmd_construct(const Options& o, std::ostream& out) {
    const std::string& kind = o.construct_kind;
    if (kind == "octads") return construct_octads(o, out);
    if (kind == "tremain14") return emit_lineset_summary(o, out, tremain_28(), "tremain14");
    if (kind == "taylor90") return emit_lineset_summary(o, out, taylor_90().lines, "taylor90");
    if (kind == "asche72") return emit_lineset_summary(o, out, asche_72().lines, "asche72");
    // from-graph6
    if (o.construct_input.empty()) throw UsageError("construct from-graph6 needs a graph6 file");
    if (o.angle.empty()) throw UsageError("construct from-graph6 needs --angle p/q");
    const Rational angle = parse_angle_flag(o.angle, "--angle");
    const Graph6Import imported = from_graph6(read_file(o.construct_input), angle, parse_srg(o.expect_srg));
    return emit_lineset_summary(o, out, imported.lines, "from-graph6", imported.warnings);
}

int cmd_validate(const Options& o, std::ostream& out) {
    const LineSet lines = load_lineset(o.input);
    const ValidationReport report = validate(lines);
    if (o.json) {
        out << validation_json(report, lines).dump(2) << '\n';
    } else {
        print_validation(out, report, lines);
    }
    return report.passed() ? kSuccess : kValidationFailure;
}

int cmd_saturate(const Options& o, std::ostream& out, std::ostream& err) {
    const LineSet lines = load_lineset(o.input);
    if (!lines.is_equiangular()) {
        err << "error: " << o.input << " is not an equiangular line set\n";
        return kValidationFailure;
    }
    const std::size_t d = lines.rank();
    const bool over = d > 64 || (d >= 1 && (std::uint64_t{1} << (d - 1)) > o.work_ceiling);
    if (over && !o.force) {
        err << "error: 2^" << (d - 1) << " sign patterns exceed the work ceiling of " << o.work_ceiling
            << "; pass --force or raise --work-ceiling\n";
        return kUsageError;
    }
    std::vector<std::size_t> basis_override;
    if (!o.basis.empty()) basis_override = parse_index_list(o.basis);

    SaturationOptions options;
    options.enumeration.threads = worker_count(o);
    if (!o.json && d >= 21) {
        options.enumeration.progress = [&err](std::uint64_t done, std::uint64_t total) {
            err << "\r" << done << " / " << total << " patterns" << std::flush;
        };
    }
    if (o.clique_budget_ms > 0) options.clique_budget = std::chrono::milliseconds(o.clique_budget_ms);

    const auto started = std::chrono::steady_clock::now();
    const SaturationReport report =
        basis_override.empty() ? check_saturated(lines, std::nullopt, options)
                               : check_saturated(lines, std::span<const std::size_t>(basis_override), options);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (options.enumeration.progress) err << '\n';

    if (!o.export_graph.empty()) {
        const auto candidates = enumerate_candidates(lines, report.basis, options.enumeration);
        std::ofstream f(o.export_graph);
        if (!f) throw Error("cannot write " + o.export_graph);
        write_dimacs(f, build_compatibility_graph(candidates, lines, report.basis));
    }

    if (o.json) {
        Json j{{"basis", one_based(report.basis)},
               {"candidate_count", report.candidate_count},
               {"clique_number", report.clique_number},
               {"clique_exact", report.clique_exact},
               {"N", report.upper_bound},
               {"n", lines.size()},
               {"saturated", report.saturated},
               {"non_basis_lines_found", report.non_basis_lines_found},
               {"non_basis_lines_form_clique", report.non_basis_lines_form_clique}};
        out << j.dump(2) << '\n';
    } else {
        out << "basis (" << report.basis.size() << "): " << join_one_based(report.basis) << '\n';
        out << "candidates: " << report.candidate_count << '\n';
        out << "clique number: " << report.clique_number << (report.clique_exact ? "" : " (lower bound, budget hit)")
            << '\n';
        out << "N = " << report.basis.size() << " + " << report.clique_number << " = " << report.upper_bound
            << " (upper bound for any equiangular set containing the basis)\n";
        out << "lines: " << lines.size() << " -> " << (report.saturated ? "saturated" : "not shown saturated")
            << '\n';
        out << "elapsed: " << std::fixed << std::setprecision(2) << seconds << " s\n";
    }
    return kSuccess;
}

int cmd_search(const Options& o, std::ostream& out) {
    const LineSet lines = load_lineset(o.input);
    if (o.rank == 0 || o.rank > lines.rank()) {
        throw UsageError("--rank must be between 1 and " + std::to_string(lines.rank()));
    }
    const SearchSummary summary = random_search(lines, o.rank, o.runs, o.seed, {worker_count(o)});

    if (!o.csv.empty()) {
        std::ostringstream csv;
        csv << "run,seed,closure_size,rank_ok\n";
        for (const auto& r : summary.log) {
            csv << r.run + 1 << ',' << r.seed << ',' << r.closure_size << ',' << (r.rank_ok ? 1 : 0) << '\n';
        }
        write_text(o.csv, csv.str());
    }

    std::optional<SubLineSet> best;
    std::vector<std::vector<std::int64_t>> complement;
    if (summary.best) {
        best = extract_sublineset(lines, summary.best->closure);
        if (!o.emit_best.empty()) write_lineset(o.emit_best, best->lines);
        if (lines.frame()) complement = orthogonal_complement(*lines.frame(), summary.best->closure);
    }

    if (o.json) {
        Json hist = Json::object();
        for (const auto& [size, count] : summary.histogram) hist[std::to_string(size)] = count;
        Json j{{"sampler", kSamplerVersion},
               {"seed", o.seed},
               {"target_rank", o.rank},
               {"runs", summary.runs},
               {"histogram", hist}};
        if (summary.best) {
            j["best"] = {{"run", summary.best->run + 1},
                         {"seed", summary.best->seed},
                         {"closure_size", summary.best->closure_size},
                         {"rank", summary.best->rank},
                         {"subset", one_based(summary.best->subset)},
                         {"closure", one_based(summary.best->closure)},
                         {"valid", best->validation.passed()}};
            if (lines.frame()) j["best"]["orthogonal_complement"] = complement;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "runs: " << summary.runs << "  target rank: " << o.rank << "  seed: " << o.seed << " ("
            << kSamplerVersion << ")\n";
        out << "closure size histogram:\n";
        for (const auto& [size, count] : summary.histogram) {
            out << "  " << std::setw(5) << size << "  " << count << (size == 0 ? "  (singular draws)" : "") << '\n';
        }
        if (summary.best) {
            out << "best: " << summary.best->closure_size << " lines of rank " << summary.best->rank << " (run "
                << summary.best->run + 1 << ", " << (best->validation.passed() ? "valid" : "INVALID") << ")\n";
            out << "closure: " << join_one_based(summary.best->closure) << '\n';
            if (lines.frame()) {
                out << "orthogonal complement of the closure:\n";
                for (const auto& v : complement) {
                    out << " ";
                    for (auto x : v) out << ' ' << x;
                    out << '\n';
                }
            }
        } else {
            out << "no nonsingular draw\n";
        }
    }
    return kSuccess;
}

int cmd_bound(const Options& o, std::ostream& out) {
    const Rational angle = parse_angle_flag(o.bound_angle, "alpha");
    if (angle <= 0 || angle >= 1) throw UsageError("alpha must lie strictly between 0 and 1");
    if (!relative_bound_applies(o.bound_r, angle)) {
        throw UsageError("the relative bound needs r < 1/alpha^2 = " + to_string(1 / (angle * angle)));
    }
    const Rational exact = relative_bound(o.bound_r, angle);
    const Integer floor = relative_bound_floor(o.bound_r, angle);
    if (o.json) {
        out << Json{{"r", o.bound_r}, {"angle", to_string(angle)}, {"exact", to_string(exact)}, {"floor", floor.get_str()}}
                   .dump(2)
            << '\n';
    } else {
        out << "R(" << o.bound_r << ", " << to_string(angle) << ") = " << to_string(exact) << "  floor " << floor
            << '\n';
    }
    return kSuccess;
}

int cmd_info(const Options& o, std::ostream& out) {
    BoundsEntry e;
    try {
        e = known_bounds(o.info_d);
    } catch (const OutOfRange& ex) {
        throw UsageError(ex.what());
    }
    if (o.json) {
        out << Json{{"d", e.dimension}, {"lower", e.lower}, {"upper", e.upper}}.dump(2) << '\n';
    } else {
        out << "N(" << e.dimension << ") ∈ [" << e.lower << ", " << e.upper << "]\n";
    }
    return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct, validate and analyze equiangular line sets with exact arithmetic", "eqlines"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Machine-readable JSON on stdout");
    app.add_option("--threads", o.threads, "Worker threads for saturate/search (default: all cores)")
        ->check(CLI::PositiveNumber);

    auto* construct = app.add_subcommand("construct", "Build a named configuration");
    construct->add_option("kind", o.construct_kind, "tremain14 | octads | taylor90 | asche72 | from-graph6")
        ->required()
        ->check(CLI::IsMember({"tremain14", "octads", "taylor90", "asche72", "from-graph6"}));
    construct->add_option("file", o.construct_input, "graph6 file (from-graph6 only)");
    construct->add_option("-o,--output", o.output, "Write the line set (or octad list) here");
    construct->add_option("--angle", o.angle, "Common angle p/q (from-graph6 only)");
    construct->add_option("--expect-srg", o.expect_srg, "Expected n,k,lambda,mu (from-graph6 only)");

    auto* validate_cmd = app.add_subcommand("validate", "Check a line set file");
    validate_cmd->add_option("file", o.input, "Line set JSON")->required();

    auto* saturate = app.add_subcommand("saturate", "Bound the extensions of a line set and test saturation");
    saturate->add_option("file", o.input, "Line set JSON")->required();
    saturate->add_option("--basis", o.basis, "Comma-separated 1-based basis indices");
    saturate->add_option("--export-graph", o.export_graph, "Write the compatibility graph in DIMACS format");
    saturate->add_option("--work-ceiling", o.work_ceiling, "Refuse above this many sign patterns (default 2^24)");
    saturate->add_flag("--force", o.force, "Run even above the work ceiling");
    saturate->add_option("--clique-budget-ms", o.clique_budget_ms, "Time budget for the clique search");

    auto* search = app.add_subcommand("search", "Random span-closure search for large lower-rank subsets");
    search->add_option("file", o.input, "Line set JSON")->required();
    search->add_option("--rank", o.rank, "Subset size / target rank")->required();
    search->add_option("--runs", o.runs, "Number of random draws")->required();
    search->add_option("--seed", o.seed, "Master seed")->required();
    search->add_option("--emit-best", o.emit_best, "Write the best closure as a line set");
    search->add_option("--csv", o.csv, "Write the per-run log as CSV");

    auto* bound = app.add_subcommand("bound", "Relative bound r(1-a^2)/(1-r a^2)");
    bound->add_option("r", o.bound_r, "Rank")->required();
    bound->add_option("alpha", o.bound_angle, "Angle p/q")->required();

    auto* info = app.add_subcommand("info", "Known range of the maximum number of equiangular lines");
    info->add_option("d", o.info_d, "Dimension (2..43)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (construct->parsed()) return cmd_construct(o, out);
        if (validate_cmd->parsed()) return cmd_validate(o, out);
        if (saturate->parsed()) return cmd_saturate(o, out, err);
        if (search->parsed()) return cmd_search(o, out);
        if (bound->parsed()) return cmd_bound(o, out);
        if (info->parsed()) return cmd_info(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const NotABasis& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailure;
    }
    return kUsageError;
}

}  // namespace eqlines::cli
