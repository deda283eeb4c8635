#include "eqlines/saturation.hpp"

#include "eqlines/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <thread>

namespace eqlines {

std::vector<std::size_t> select_basis(const LineSet& lines, std::optional<std::span<const std::size_t>> override) {
    const std::size_t n = lines.size();
    if (override) {
        std::vector<std::size_t> basis(override->begin(), override->end());
        for (std::size_t i : basis) {
            if (i >= n) throw NotABasis("basis index " + std::to_string(i + 1) + " is out of range");
        }
        if (basis.size() != lines.rank()) {
            throw NotABasis("basis needs " + std::to_string(lines.rank()) + " lines, got " +
                            std::to_string(basis.size()));
        }
        if (rank(lines.gram().principal_submatrix(basis)) != basis.size()) {
            throw NotABasis("basis lines are linearly dependent");
        }
        return basis;
    }
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < n && basis.size() < lines.rank(); ++i) {
        basis.push_back(i);
        if (rank(lines.gram().principal_submatrix(basis)) != basis.size()) basis.pop_back();
    }
    return basis;
}

namespace {

// Gray-code walk over sign patterns. Bit b of a pattern set means the sign
// of basis coordinate b + 1 is negative; coordinate 0 is always +.
// Tracks y = N * eps and q = eps^T N eps for the integer matrix N.
template <class Int>
class PatternScanner {
public:
    PatternScanner(const IntMatrix& n, const Integer& target) : d_(n.rows), target_(convert(target)) {
        n_.reserve(n.entries.size());
        for (const auto& e : n.entries) n_.push_back(convert(e));
    }

    void scan(std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& found,
              const std::function<void(std::uint64_t)>& tick, std::uint64_t interval) const {
        if (lo >= hi) return;
        std::uint64_t gray = lo ^ (lo >> 1);
        std::vector<int> eps(d_, 1);
        for (std::size_t k = 1; k < d_; ++k) {
            if ((gray >> (k - 1)) & 1u) eps[k] = -1;
        }
        std::vector<Int> y(d_, Int(0));
        for (std::size_t i = 0; i < d_; ++i) {
            for (std::size_t j = 0; j < d_; ++j) {
                if (eps[j] > 0) {
                    y[i] += n_[i * d_ + j];
                } else {
                    y[i] -= n_[i * d_ + j];
                }
            }
        }
        Int q(0);
        for (std::size_t i = 0; i < d_; ++i) {
            if (eps[i] > 0) {
                q += y[i];
            } else {
                q -= y[i];
            }
        }
        Int step_term;
        for (std::uint64_t i = lo;;) {
            if (q == target_) found.push_back(gray);
            if (tick && ((i - lo + 1) % interval == 0)) tick(interval);
            if (++i == hi) break;
            const std::size_t k = static_cast<std::size_t>(std::countr_zero(i)) + 1;
            // eps' = eps - 2 eps_k e_k:
            //   q' = q - 4 eps_k y_k + 4 N_kk,  y' = y - 2 eps_k N e_k.
            step_term = y[k];
            step_term *= 4;
            if (eps[k] > 0) {
                q -= step_term;
            } else {
                q += step_term;
            }
            step_term = n_[k * d_ + k];
            step_term *= 4;
            q += step_term;
            for (std::size_t r = 0; r < d_; ++r) {
                step_term = n_[r * d_ + k];
                step_term *= 2;
                if (eps[k] > 0) {
                    y[r] -= step_term;
                } else {
                    y[r] += step_term;
                }
            }
            eps[k] = -eps[k];
            gray ^= std::uint64_t{1} << (k - 1);
        }
        if (tick && (hi - lo) % interval != 0) tick((hi - lo) % interval);
    }

private:
    static Int convert(const Integer& v) {
        if constexpr (std::is_same_v<Int, Integer>) {
            return v;
        } else {
            return static_cast<Int>(v.get_si());
        }
    }

    std::size_t d_;
    std::vector<Int> n_;
    Int target_;
};

std::uint64_t lexicographic_key(std::uint64_t gray, std::size_t d) {
    // Coordinate k (1 <= k < d) becomes bit d - 1 - k, so that numeric order
    // on keys is lexicographic order on sign vectors with + before -.
    std::uint64_t key = 0;
    for (std::size_t k = 1; k < d; ++k) {
        if ((gray >> (k - 1)) & 1u) key |= std::uint64_t{1} << (d - 1 - k);
    }
    return key;
}

template <class Int>
std::vector<std::uint64_t> scan_all(const IntMatrix& n, const Integer& target, std::uint64_t total,
                                    const EnumerationOptions& options) {
    const PatternScanner<Int> scanner(n, target);
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(
                                                                                  std::min<std::uint64_t>(total, 1024))));
    std::vector<std::vector<std::uint64_t>> found(threads);
    std::atomic<std::uint64_t> done{0};
    std::mutex sink_mutex;
    std::function<void(std::uint64_t)> tick;
    if (options.progress) {
        tick = [&](std::uint64_t delta) {
            const std::uint64_t now = done += delta;
            std::lock_guard lock(sink_mutex);
            options.progress(now, total);
        };
    }
    const std::uint64_t interval = std::max<std::uint64_t>(1, options.progress_interval);
    auto range = [&](unsigned t) {
        const std::uint64_t lo = total / threads * t + std::min<std::uint64_t>(t, total % threads);
        const std::uint64_t hi = lo + total / threads + (t < total % threads ? 1 : 0);
        return std::pair{lo, hi};
    };
    if (threads == 1) {
        scanner.scan(0, total, found[0], tick, interval);
    } else {
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                auto [lo, hi] = range(t);
                scanner.scan(lo, hi, found[t], tick, interval);
            });
        }
        for (auto& w : workers) w.join();
    }
    std::vector<std::uint64_t> all;
    for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
    return all;
}

bool fits_int64(const IntMatrix& n, const Integer& target) {
    Integer total = 0;
    for (const auto& e : n.entries) total += abs(e);
    // |y_i| and |q| are bounded by the total absolute entry sum.
    const Integer limit = Integer(1) << 60;
    return total * 4 < limit && abs(target) < limit;
}

}  // namespace

std::vector<Candidate> enumerate_candidates(const LineSet& lines, std::span<const std::size_t> basis,
                                            const EnumerationOptions& options) {
    const std::size_t d = basis.size();
    if (d == 0) return {};
    if (d > 63) throw OutOfRange("more than 2^62 sign patterns");
    const ScaledMatrix inv = scaled_inverse(lines.gram().principal_submatrix(basis));
    const Rational& angle = lines.angle();

    // Unit norm: angle^2 * eps^T N eps / den = 1, i.e. q = den * adenom^2 / anum^2.
    const Integer anum2 = angle.get_num() * angle.get_num();
    const Integer rhs = inv.denominator * angle.get_den() * angle.get_den();
    if (sgn(anum2) == 0 || rhs % anum2 != 0) return {};
    const Integer target = rhs / anum2;

    const std::uint64_t total = std::uint64_t{1} << (d - 1);
    std::vector<std::uint64_t> patterns = fits_int64(inv.numerators, target)
                                              ? scan_all<std::int64_t>(inv.numerators, target, total, options)
                                              : scan_all<Integer>(inv.numerators, target, total, options);
    std::sort(patterns.begin(), patterns.end(), [d](std::uint64_t a, std::uint64_t b) {
        return lexicographic_key(a, d) < lexicographic_key(b, d);
    });

    std::vector<Candidate> out;
    out.reserve(patterns.size());
    for (std::uint64_t gray : patterns) {
        Candidate c;
        c.signs.assign(d, 1);
        for (std::size_t k = 1; k < d; ++k) {
            if ((gray >> (k - 1)) & 1u) c.signs[k] = -1;
        }
        c.coeffs.resize(d);
        for (std::size_t i = 0; i < d; ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < d; ++j) {
                if (c.signs[j] > 0) {
                    s += inv.numerators(i, j);
                } else {
                    s -= inv.numerators(i, j);
                }
            }
            Rational coeff(s, inv.denominator);
            coeff.canonicalize();
            c.coeffs[i] = angle * coeff;
        }
        out.push_back(std::move(c));
    }
    return out;
}

Rational candidate_inner_product(const Candidate& a, const Candidate& b, const Rational& angle) {
    Rational s = 0;
    for (std::size_t k = 0; k < a.signs.size(); ++k) {
        if (a.signs[k] > 0) {
            s += b.coeffs[k];
        } else {
            s -= b.coeffs[k];
        }
    }
    return angle * s;
}

SimpleGraph build_compatibility_graph(std::span<const Candidate> candidates, const LineSet& lines,
                                      std::span<const std::size_t> basis) {
    const Rational& angle = lines.angle();
    const Rational neg = -angle;
    SimpleGraph g(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i].signs.size() != basis.size()) throw DimensionMismatch("candidate length != basis size");
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            const Rational ip = candidate_inner_product(candidates[i], candidates[j], angle);
            if (ip == angle || ip == neg) {
                g.add_edge(i, j);
            } else if (ip == 1 || ip == -1) {
                throw Error("candidates " + std::to_string(i) + " and " + std::to_string(j) + " are the same line");
            }
        }
    }
    return g;
}

SaturationReport check_saturated(const LineSet& lines, std::optional<std::span<const std::size_t>> basis_override,
                                 const SaturationOptions& options) {
    if (!lines.is_equiangular()) throw Error("saturation check needs an equiangular line set");
    SaturationReport report;
    report.basis = select_basis(lines, basis_override);
    const auto candidates = enumerate_candidates(lines, report.basis, options.enumeration);
    const SimpleGraph graph = build_compatibility_graph(candidates, lines, report.basis);
    const CliqueResult clique = max_clique(graph, options.clique_budget);

    report.candidate_count = candidates.size();
    report.clique_number = clique.size;
    report.clique_exact = clique.exact;
    report.clique_witness = clique.witness;
    report.upper_bound = report.basis.size() + clique.size;
    report.saturated = clique.exact && report.upper_bound == lines.size();

    // Each non-basis line meets basis line k at G(b_k, j) = eps_k * angle;
    // normalize the first sign and look the pattern up among the candidates.
    std::map<std::vector<std::int8_t>, std::size_t> by_signs;
    for (std::size_t i = 0; i < candidates.size(); ++i) by_signs.emplace(candidates[i].signs, i);
    std::vector<bool> in_basis(lines.size(), false);
    for (std::size_t b : report.basis) in_basis[b] = true;
    std::vector<std::size_t> matched;
    report.non_basis_lines_found = true;
    for (std::size_t j = 0; j < lines.size(); ++j) {
        if (in_basis[j]) continue;
        std::vector<std::int8_t> signs;
        for (std::size_t b : report.basis) signs.push_back(lines.gram()(b, j) == lines.angle() ? 1 : -1);
        if (signs[0] < 0) {
            for (auto& s : signs) s = static_cast<std::int8_t>(-s);
        }
        const auto it = by_signs.find(signs);
        if (it == by_signs.end()) {
            report.non_basis_lines_found = false;
            break;
        }
        matched.push_back(it->second);
    }
    report.non_basis_lines_form_clique = report.non_basis_lines_found && is_clique(graph, matched);
    return report;
}

}  // namespace eqlines
