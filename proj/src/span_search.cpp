#include "eqlines/span_search.hpp"

#include "eqlines/errors.hpp"
#include "eqlines/rng.hpp"

#include <algorithm>
#include <thread>

namespace eqlines {

namespace {

// The Gram scaled to integers once, shared by every closure computation:
// H = D * G. With H_SS^{-1} = N / det, the projection criterion
// G_jS G_SS^{-1} G_Sj = G_jj becomes H_jS N H_Sj = det * H_jj.
class ClosureContext {
public:
    explicit ClosureContext(const LineSet& lines) : scaled_(scale_to_integers(lines.gram())) {}

    std::size_t size() const { return scaled_.numerators.rows; }

    std::vector<std::size_t> closure(std::span<const std::size_t> subset) const {
        const std::size_t d = subset.size();
        const IntMatrix& h = scaled_.numerators;
        IntMatrix block(d, d);
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = 0; b < d; ++b) block(a, b) = h(subset[a], subset[b]);
        }
        ScaledMatrix inv;
        try {
            inv = integer_inverse(block);
        } catch (const SingularMatrix&) {
            throw RankDeficient("subset lines are linearly dependent");
        }

        std::vector<bool> chosen(size(), false);
        for (std::size_t s : subset) chosen[s] = true;
        std::vector<std::size_t> out;
        Integer t;
        Integer q;
        for (std::size_t j = 0; j < size(); ++j) {
            if (chosen[j]) {
                out.push_back(j);
                continue;
            }
            q = 0;
            for (std::size_t a = 0; a < d; ++a) {
                t = 0;
                for (std::size_t b = 0; b < d; ++b) {
                    mpz_addmul(t.get_mpz_t(), inv.numerators(a, b).get_mpz_t(), h(subset[b], j).get_mpz_t());
                }
                mpz_addmul(q.get_mpz_t(), t.get_mpz_t(), h(j, subset[a]).get_mpz_t());
            }
            if (q == inv.denominator * h(j, j)) out.push_back(j);
        }
        return out;
    }

private:
    ScaledMatrix scaled_;
};

}  // namespace

std::vector<std::size_t> span_closure(const LineSet& lines, std::span<const std::size_t> subset) {
    for (std::size_t s : subset) {
        if (s >= lines.size()) throw OutOfRange("subset index out of range");
    }
    return ClosureContext(lines).closure(subset);
}

SearchSummary random_search(const LineSet& lines, std::size_t target_rank, std::size_t runs, std::uint64_t seed,
                            const SearchOptions& options) {
    if (target_rank > lines.rank()) throw OutOfRange("target rank exceeds the rank of the line set");
    const ClosureContext context(lines);

    std::vector<SearchRun> results(runs);
    auto do_run = [&](std::size_t r) {
        SearchRun& run = results[r];
        run.run = r;
        run.seed = derive_run_seed(seed, r);
        std::mt19937_64 engine(run.seed);
        run.subset = sample_subset(engine, lines.size(), target_rank);
        try {
            run.closure = context.closure(run.subset);
            run.rank_ok = true;
            run.rank = target_rank;
            run.closure_size = run.closure.size();
        } catch (const RankDeficient&) {
            run.rank_ok = false;
        }
    };

    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1 || runs < 2) {
        for (std::size_t r = 0; r < runs; ++r) do_run(r);
    } else {
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                for (std::size_t r = t; r < runs; r += threads) do_run(r);
            });
        }
        for (auto& w : workers) w.join();
    }

    SearchSummary summary;
    summary.runs = runs;
    for (auto& run : results) {
        summary.histogram[run.closure_size] += 1;
        summary.log.push_back({run.run, run.seed, run.closure_size, run.rank_ok});
        if (run.rank_ok && (!summary.best || run.closure_size > summary.best->closure_size)) {
            summary.best = std::move(run);
        }
    }
    return summary;
}

SubLineSet extract_sublineset(const LineSet& lines, std::span<const std::size_t> indices) {
    for (std::size_t i : indices) {
        if (i >= lines.size()) throw OutOfRange("index out of range");
    }
    std::optional<IntegerFrame> frame;
    if (lines.frame()) {
        IntegerFrame f;
        f.squared_norm = lines.frame()->squared_norm;
        for (std::size_t i : indices) f.vectors.push_back(lines.frame()->vectors[i]);
        frame = std::move(f);
    }
    LineSet sub(lines.angle(), lines.gram().principal_submatrix(indices), std::move(frame));
    ValidationReport report = validate(sub);
    return {std::move(sub), std::move(report)};
}

std::vector<std::vector<std::int64_t>> orthogonal_complement(const IntegerFrame& frame,
                                                             std::span<const std::size_t> indices) {
    if (indices.empty()) throw EmptyResult("no vectors given");
    const std::size_t dim = frame.vectors.at(indices.front()).size();
    RatMatrix m(indices.size(), dim);
    for (std::size_t r = 0; r < indices.size(); ++r) {
        const auto& v = frame.vectors.at(indices[r]);
        if (v.size() != dim) throw DimensionMismatch("frame vectors differ in length");
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = Rational(static_cast<long>(v[c]));
    }
    std::vector<std::vector<std::int64_t>> out;
    for (const RatVector& v : nullspace(m)) {
        Integer l = common_denominator(v);
        Integer g = 0;
        std::vector<Integer> ints;
        for (const auto& x : v) {
            Integer k = x.get_num() * (l / x.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
            ints.push_back(std::move(k));
        }
        std::vector<std::int64_t> row;
        for (auto& k : ints) {
            k /= g;
            if (!k.fits_slong_p()) throw Error("complement vector does not fit 64-bit integers");
            row.push_back(k.get_si());
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace eqlines
