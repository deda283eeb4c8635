// Acceptance suite: one PASS/FAIL/SKIP line per criterion.
#include "eqlines/constructions.hpp"
#include "eqlines/errors.hpp"
#include "eqlines/graph6.hpp"
#include "eqlines/lineset.hpp"
#include "eqlines/maxclique.hpp"
#include "eqlines/saturation.hpp"
#include "eqlines/span_search.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace eqlines;

namespace {

constexpr std::uint64_t kSearchSeed = 1;
constexpr std::size_t kSearchRuns = 5000;
constexpr std::size_t kSrgRuns = 2000;

struct Outcome {
    enum class Status { kPass, kFail, kSkip } status = Status::kPass;
    std::string detail;
};

Outcome pass(std::string detail) { return {Outcome::Status::kPass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Outcome::Status::kFail, std::move(detail)}; }
Outcome skip(std::string detail) { return {Outcome::Status::kSkip, std::move(detail)}; }

class Checks {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && first_failure_.empty()) first_failure_ = what;
    }
    Outcome finish(std::string summary) const {
        return first_failure_.empty() ? pass(std::move(summary)) : fail(first_failure_);
    }

private:
    std::string first_failure_;
};

Rational q(long n, long d = 1) { return make_rational(n, d); }

std::vector<std::size_t> zero_based(std::span<const std::size_t> one_based) {
    std::vector<std::size_t> out;
    for (std::size_t k : one_based) out.push_back(k - 1);
    return out;
}

Outcome octad_lexicode() {
    Checks c;
    const OctadDesign design = generate_octads();
    c.expect(design.octads.size() == 759, "octad count is not 759");
    c.expect(!design.octads.empty() && octad_points(design.octads.front()) == std::array<int, 8>{1, 2, 3, 4, 5, 6, 7, 8},
             "first octad is not {1..8}");
    std::array<int, 24> per_point{};
    bool intersections_ok = true;
    for (std::size_t a = 0; a < design.octads.size(); ++a) {
        for (int p : octad_points(design.octads[a])) ++per_point[p - 1];
        for (std::size_t b = a + 1; b < design.octads.size(); ++b) {
            const int k = std::popcount(design.octads[a] & design.octads[b]);
            intersections_ok = intersections_ok && (k == 0 || k == 2 || k == 4);
        }
    }
    c.expect(std::all_of(per_point.begin(), per_point.end(), [](int n) { return n == 253; }),
             "some point is not in 253 octads");
    c.expect(intersections_ok, "an intersection size lies outside {0,2,4}");
    return c.finish("759 octads, 253 per point, intersections in {0,2,4}");
}

Outcome taylor_and_asche() {
    Checks c;
    const OctadFamily taylor = taylor_90();
    std::ifstream table(std::string(EQLINES_TEST_DATA) + "/taylor_octads.txt");
    std::vector<std::array<int, 8>> rows;
    std::array<int, 8> row{};
    while (table >> row[0] >> row[1] >> row[2] >> row[3] >> row[4] >> row[5] >> row[6] >> row[7]) rows.push_back(row);
    c.expect(rows.size() == 90, "reference table did not load 90 rows");
    c.expect(taylor.octads.size() == 90, "taylor family does not have 90 octads");
    for (std::size_t i = 0; i < std::min(rows.size(), taylor.octads.size()); ++i) {
        c.expect(octad_points(taylor.octads[i]) == rows[i], "octad " + std::to_string(i + 1) + " differs from the table");
    }
    c.expect(taylor.lines.rank() == 20, "taylor rank is not 20");
    c.expect(taylor.lines.angle() == q(1, 5), "taylor angle is not 1/5");
    c.expect(validate(taylor.lines).passed(), "taylor fails validation");

    const OctadFamily asche = asche_72();
    const auto discarded = std::count_if(taylor.octads.begin(), taylor.octads.end(),
                                         [](Octad o) { return (o & (1u << 2)) != 0; });
    c.expect(discarded == 18, "discarded octad count is not 18");
    c.expect(asche.lines.size() == 72, "asche family does not have 72 lines");
    c.expect(asche.lines.rank() == 19, "asche rank is not 19");
    c.expect(validate(asche.lines).passed(), "asche fails validation");
    return c.finish("90 lines rank 20 match the table; 72 lines rank 19 after dropping 18 octads");
}

Outcome tremain() {
    Checks c;
    const std::array<std::array<int, 6>, 7> circles{{{1, 2, 17, 20, 25, 27},
                                                      {1, 3, 5, 6, 21, 24},
                                                      {5, 7, 9, 10, 25, 28},
                                                      {1, 4, 9, 11, 13, 14},
                                                      {5, 8, 13, 15, 17, 18},
                                                      {9, 12, 17, 19, 21, 22},
                                                      {13, 16, 21, 23, 25, 26}}};
    const std::array<std::array<int, 6>, 7> bullets{{{3, 4, 18, 19, 26, 28},
                                                      {2, 4, 7, 8, 22, 23},
                                                      {6, 8, 11, 12, 26, 27},
                                                      {2, 3, 10, 12, 15, 16},
                                                      {6, 7, 14, 16, 19, 20},
                                                      {10, 11, 18, 20, 23, 24},
                                                      {14, 15, 22, 24, 27, 28}}};
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(14, 28);
    for (int r = 0; r < 7; ++r) {
        for (int col : circles[r]) w(r, col - 1) = std::sqrt(1.0 / 5);
        for (int col : bullets[r]) w(r, col - 1) = -std::sqrt(1.0 / 5);
    }
    for (int x = 0; x < 7; ++x) {
        for (int y = 0; y < 4; ++y) w(13 - x, 27 - 4 * x - y) = std::sqrt(2.0 / 5);
    }
    const Eigen::MatrixXd oracle = w.transpose() * w;
    const LineSet t = tremain_28();
    c.expect(t.size() == 28, "line count is not 28");
    c.expect(t.rank() == 14, "rank is not 14");
    c.expect(t.angle() == q(1, 5), "angle is not 1/5");
    c.expect(validate(t).passed(), "fails validation");
    double worst = 0;
    for (std::size_t i = 0; i < 28; ++i) {
        for (std::size_t j = 0; j < 28; ++j) worst = std::max(worst, std::abs(t.gram()(i, j).get_d() - oracle(i, j)));
    }
    c.expect(worst < 1e-12, "Gram differs from the numeric oracle");
    std::ostringstream s;
    s << "28 lines rank 14, max deviation from numeric Gram " << worst;
    return c.finish(s.str());
}

Outcome saturation_r14() {
    Checks c;
    const LineSet t = tremain_28();
    const auto basis = zero_based(tremain_basis_one_based());
    const SaturationReport r = check_saturated(t, std::span<const std::size_t>(basis));
    c.expect(r.candidate_count == 378, "candidate count " + std::to_string(r.candidate_count) + " != 378");
    c.expect(r.clique_number == 14 && r.clique_exact, "clique number is not exactly 14");
    c.expect(r.upper_bound == 28, "N is not 28");
    c.expect(r.saturated, "not reported saturated");
    return c.finish("378 candidates, clique number 14, N = 28, saturated");
}

Outcome saturation_r20() {
    Checks c;
    const OctadFamily taylor = taylor_90();
    const auto basis = zero_based(taylor_basis_one_based());
    const SaturationReport r = check_saturated(taylor.lines, std::span<const std::size_t>(basis));
    c.expect(r.candidate_count == 70, "candidate count " + std::to_string(r.candidate_count) + " != 70");
    c.expect(r.non_basis_lines_found, "candidates do not match the 70 non-basis lines");
    c.expect(r.non_basis_lines_form_clique, "non-basis candidates are not pairwise compatible");
    c.expect(r.clique_number == 70, "clique number is not 70");
    c.expect(r.upper_bound == 90, "N is not 90");
    c.expect(r.saturated, "not reported saturated");
    return c.finish("70 candidates = the 70 non-basis lines, N = 90, saturated");
}

Outcome relative_bounds() {
    Checks c;
    const std::array<std::pair<std::size_t, long>, 4> table{{{42, 288}, {41, 246}, {40, 213}, {39, 187}}};
    for (const auto& [d, expected] : table) {
        c.expect(relative_bound_floor(d, q(1, 7)) == expected, "floor for d = " + std::to_string(d));
    }
    c.expect(relative_bound(40, q(1, 7)) == q(640, 3), "R(40, 1/7) != 640/3");
    c.expect(relative_bound(20, q(1, 5)) == 96, "R(20, 1/5) != 96");
    c.expect(relative_bound(19, q(1, 5)) == 76, "R(19, 1/5) != 76");
    return c.finish("floors 288, 246, 213, 187; R(20,1/5) = 96, R(19,1/5) = 76");
}

Outcome search_r18() {
    Checks c;
    const LineSet asche = asche_72().lines;
    const SearchSummary summary = random_search(asche, 18, kSearchRuns, kSearchSeed);
    if (!summary.best) return fail("every draw was singular");
    const SearchRun& best = *summary.best;
    c.expect(best.closure_size == 56, "best closure is " + std::to_string(best.closure_size) + ", not 56");
    c.expect(best.rank == 18, "best rank is not 18");
    const SubLineSet sub = extract_sublineset(asche, best.closure);
    c.expect(sub.validation.passed(), "extracted set fails validation");
    c.expect(sub.lines.rank() == 18, "extracted set rank is not 18");
    const SaturationReport r = check_saturated(sub.lines);
    c.expect(r.saturated, "extracted set is not reported saturated");
    const auto hits = summary.histogram.count(56) ? summary.histogram.at(56) : 0;
    std::ostringstream s;
    s << "seed " << kSearchSeed << ": closure 56 first at run " << best.run + 1 << " (" << hits << " of " << kSearchRuns
      << " runs), saturated with " << r.candidate_count << " candidates, clique number " << r.clique_number;
    return c.finish(s.str());
}

Outcome srg_344() {
    const char* path = std::getenv("EQLINES_SRG344_G6");
    if (!path || !*path) return skip("EQLINES_SRG344_G6 not set");
    std::ifstream in(path);
    if (!in) return skip(std::string("cannot read ") + path);
    std::stringstream text;
    text << in.rdbuf();
    Checks c;
    const Graph6Import imported = from_graph6(text.str(), q(1, 7), SrgParameters{344, 168, 92, 72});
    c.expect(imported.warnings.empty(), "graph is not SRG(344,168,92,72)");
    c.expect(imported.lines.size() == 344, "line count is not 344");
    c.expect(imported.lines.rank() == 43, "rank is not 43");
    c.expect(validate(imported.lines).passed(), "fails validation");
    const SearchSummary summary = random_search(imported.lines, 42, kSrgRuns, kSearchSeed);
    const std::size_t best = summary.best ? summary.best->closure_size : 0;
    c.expect(best >= 200, "best closure " + std::to_string(best) + " < 200");
    return c.finish("344 lines rank 43; best rank-42 closure " + std::to_string(best));
}

// Exhaustive sign-system oracle for the candidate enumeration.
std::vector<std::vector<std::int8_t>> sign_oracle(const LineSet& ls, const std::vector<std::size_t>& basis) {
    const RatMatrix gb = ls.gram().principal_submatrix(basis);
    const std::size_t d = basis.size();
    std::vector<std::vector<std::int8_t>> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (d - 1)); ++bits) {
        std::vector<std::int8_t> signs(d, 1);
        RatVector rhs(d);
        for (std::size_t k = 0; k < d; ++k) {
            if (k > 0 && ((bits >> (d - 1 - k)) & 1)) signs[k] = -1;
            rhs[k] = ls.angle() * signs[k];
        }
        const RatVector x = solve(gb, rhs);
        if (dot(x, gb * std::span<const Rational>(x)) == 1) out.push_back(signs);
    }
    return out;
}

Outcome property_suites() {
    Checks c;
    std::mt19937_64 rng(kSearchSeed);

    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 20;
        SimpleGraph g(n);
        std::vector<std::uint32_t> adj(n, 0);
        const double p = 0.05 + 0.9 * std::uniform_real_distribution<double>(0, 1)(rng);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                if (std::bernoulli_distribution(p)(rng)) {
                    g.add_edge(u, v);
                    adj[u] |= 1u << v;
                    adj[v] |= 1u << u;
                }
            }
        }
        std::size_t brute = 0;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            bool clique = true;
            for (std::uint32_t rest = mask; rest && clique; rest &= rest - 1) {
                const int u = std::countr_zero(rest);
                clique = ((adj[u] | (1u << u)) & mask) == mask;
            }
            if (clique) brute = std::max<std::size_t>(brute, std::popcount(mask));
        }
        const CliqueResult r = max_clique(g);
        c.expect(r.size == brute && is_clique(g, r.witness), "max_clique disagrees with brute force");
    }

    int enumerated = 0;
    for (int trial = 0; trial < 2000 && enumerated < 100; ++trial) {
        const std::size_t n = 2 + rng() % 5;
        SignMatrix s(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) s.set(i, j, (rng() & 1) ? 1 : -1);
        }
        const Rational angle = (trial % 3 == 0) ? q(1, 2) : (trial % 3 == 1 ? q(1, 3) : q(1, 5));
        const LineSet ls = from_sign_matrix(s, angle);
        if (ls.rank() > 4 || !validate(ls).passed()) continue;
        const auto basis = select_basis(ls);
        std::vector<std::vector<std::int8_t>> got;
        for (const auto& cand : enumerate_candidates(ls, basis)) got.push_back(cand.signs);
        c.expect(got == sign_oracle(ls, basis), "enumeration disagrees with the sign-system oracle");
        ++enumerated;
    }
    c.expect(enumerated >= 50, "too few rank <= 4 equiangular sets sampled");

    const LineSet taylor = taylor_90().lines;
    std::vector<std::size_t> all(90);
    std::iota(all.begin(), all.end(), 0);
    for (int trial = 0; trial < 100; ++trial) {
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<std::size_t> subset(all.begin(), all.begin() + 4 + rng() % 16);
        std::sort(subset.begin(), subset.end());
        const std::size_t r = rank(taylor.gram().principal_submatrix(subset));
        if (r < subset.size()) continue;
        std::vector<std::size_t> by_rank;
        for (std::size_t j = 0; j < 90; ++j) {
            std::vector<std::size_t> ext = subset;
            ext.push_back(j);
            if (rank(taylor.gram().principal_submatrix(ext)) == r) by_rank.push_back(j);
        }
        c.expect(span_closure(taylor, subset) == by_rank, "span closure disagrees with the rank criterion");
    }

    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 7;
        const std::size_t k = 1 + rng() % n;
        RatMatrix m(n, k);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < k; ++j) m(i, j) = q(static_cast<long>(rng() % 7) - 3, 1 + rng() % 4);
        }
        RatMatrix g = m * m.transpose();
        if (trial % 2) g(rng() % n, rng() % n) -= q(1, 2 + rng() % 5);
        if (!g.is_symmetric()) continue;
        Eigen::MatrixXd gd(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) gd(i, j) = g(i, j).get_d();
        }
        const double smallest = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(gd).eigenvalues().minCoeff();
        if (std::abs(smallest) < 1e-9) {
            c.expect(is_psd(g), "PSD test rejects a singular Gram matrix");
        } else {
            c.expect(is_psd(g) == (smallest > 0), "PSD test disagrees with the eigenvalue oracle");
        }
    }
    return c.finish("max clique x200, enumeration x" + std::to_string(enumerated) +
                    ", span closure x100, PSD x200");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"octad lexicode", octad_lexicode},
        {"taylor 90 and asche 72", taylor_and_asche},
        {"tremain 28", tremain},
        {"saturation in R^14", saturation_r14},
        {"saturation in R^20", saturation_r20},
        {"relative bounds", relative_bounds},
        {"span search in R^18", search_r18},
        {"SRG(344,168,92,72)", srg_344},
        {"property suites", property_suites},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const char* tag = outcome.status == Outcome::Status::kPass ? "PASS"
                          : outcome.status == Outcome::Status::kFail ? "FAIL"
                                                                     : "SKIP";
        failures += outcome.status == Outcome::Status::kFail;
        std::printf("%s  %zu  %-24s %7.2f s  %s\n", tag, i + 1, criteria[i].first.c_str(), seconds,
                    outcome.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
