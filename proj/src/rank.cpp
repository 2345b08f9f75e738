#include "tracealg/rank.hpp"

#include <algorithm>
#include <stdexcept>

namespace tracealg {

namespace {

uint64_t powmod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

constexpr uint64_t kPrimes[2] = {2305843009213693951ull /* 2^61 - 1 */,
                                 1152921504606846883ull /* < 2^60 */};

} // namespace

int rank_mod_p(std::vector<std::vector<uint64_t>>& m, uint64_t p) {
    int rows = int(m.size());
    if (rows == 0) return 0;
    int cols = int(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[size_t(r)][size_t(c)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[size_t(piv)], m[size_t(rank)]);
        uint64_t inv = powmod(m[size_t(rank)][size_t(c)], p - 2, p);
        auto& pr = m[size_t(rank)];
        for (int j = c; j < cols; ++j) pr[size_t(j)] = mulmod(pr[size_t(j)], inv, p);
        for (int r = rank + 1; r < rows; ++r) {
            uint64_t f = m[size_t(r)][size_t(c)];
            if (f == 0) continue;
            auto& rr = m[size_t(r)];
            for (int j = c; j < cols; ++j) {
                uint64_t sub = mulmod(f, pr[size_t(j)], p);
                rr[size_t(j)] = (rr[size_t(j)] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

int rank_exact(std::vector<std::vector<Int>> m) {
    int rows = int(m.size());
    if (rows == 0) return 0;
    int cols = int(m[0].size());
    int rank = 0;
    Int prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[size_t(r)][size_t(c)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[size_t(piv)], m[size_t(rank)]);
        const Int pivval = m[size_t(rank)][size_t(c)];
        for (int r = rank + 1; r < rows; ++r) {
            for (int j = c + 1; j < cols; ++j) {
                m[size_t(r)][size_t(j)] =
                    (pivval * m[size_t(r)][size_t(j)] - m[size_t(r)][size_t(c)] * m[size_t(rank)][size_t(j)]) /
                    prev;
            }
            m[size_t(r)][size_t(c)] = 0;
        }
        prev = pivval;
        ++rank;
    }
    return rank;
}

std::vector<TraceElement> full_algebra_generators(int degree, bool trace_zero) {
    std::vector<TraceElement> gens;
    for (const TraceWord& w : words_up_to(degree, trace_zero ? 2 : 1))
        gens.push_back(TraceElement{{{1, w}}});
    return gens;
}

namespace {

// Multisets of generator indices with degrees summing to `degree`.
void enumerate_columns(const std::vector<int>& degs, int start, int remaining,
                       std::vector<int>& stack, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(stack);
        return;
    }
    for (int i = start; i < int(degs.size()); ++i) {
        if (degs[size_t(i)] > remaining) continue;
        stack.push_back(i);
        enumerate_columns(degs, i, remaining - degs[size_t(i)], stack, out);
        stack.pop_back();
    }
}

int run_one_seed(const std::vector<TraceElement>& gens,
                 const std::vector<std::vector<int>>& columns, const DimensionQuery& q,
                 uint64_t seed, uint64_t prime, bool also_exact) {
    int nrows = int(columns.size()) + q.margin;
    std::mt19937_64 rng(seed);
    std::vector<std::vector<uint64_t>> m;
    m.resize(size_t(nrows));
    std::vector<std::vector<Int>> mx;
    std::vector<SamplePoint> pts;
    for (int r = 0; r < nrows; ++r) {
        SamplePoint pt = random_sample(q.n, rng, q.trace_zero);
        ModSample ms = reduce_mod(pt, prime);
        std::vector<uint64_t> vals(gens.size());
        for (size_t g = 0; g < gens.size(); ++g) vals[g] = eval_trace_mod(gens[g], ms);
        auto& row = m[size_t(r)];
        row.resize(columns.size());
        for (size_t c = 0; c < columns.size(); ++c) {
            uint64_t v = 1;
            for (int gi : columns[c]) v = mulmod(v, vals[size_t(gi)], prime);
            row[c] = v;
        }
        if (also_exact) pts.push_back(pt);
    }
    int rank = rank_mod_p(m, prime);
    if (also_exact) {
        mx.resize(size_t(nrows));
        for (int r = 0; r < nrows; ++r) {
            std::vector<Rat> vals(gens.size());
            for (size_t g = 0; g < gens.size(); ++g) vals[g] = eval_trace(gens[g], pts[size_t(r)]);
            auto& row = mx[size_t(r)];
            row.resize(columns.size());
            for (size_t c = 0; c < columns.size(); ++c) {
                Rat v(1);
                for (int gi : columns[c]) v *= vals[size_t(gi)];
                if (boost::multiprecision::denominator(v) != 1)
                    throw std::logic_error("expected integral evaluations");
                row[c] = Int(boost::multiprecision::numerator(v));
            }
        }
        int er = rank_exact(std::move(mx));
        if (er != rank) throw RankDisagreement("modular rank disagrees with the exact oracle");
    }
    return rank;
}

} // namespace

DimensionResult graded_dimension(const std::vector<TraceElement>& gens, const DimensionQuery& q) {
    std::vector<int> degs(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) degs[i] = gens[i].degree();
    std::vector<std::vector<int>> columns;
    std::vector<int> stack;
    enumerate_columns(degs, 0, q.degree, stack, columns);
    DimensionResult res;
    res.columns = int(columns.size());
    if (columns.empty()) {
        res.dimension = 0;
        return res;
    }
    int r1 = run_one_seed(gens, columns, q, q.seed, kPrimes[0], q.exact_oracle);
    int r2 = run_one_seed(gens, columns, q, q.seed * 0x9e3779b97f4a7c15ull + 1, kPrimes[1], false);
    if (r1 != r2)
        throw RankDisagreement("graded dimension differs between seeds: " + std::to_string(r1) +
                               " vs " + std::to_string(r2));
    res.dimension = r1;
    return res;
}

std::vector<VerifyRow> verify_generating_set(const std::vector<TraceElement>& gens, int n,
                                             int d_max, bool trace_zero,
                                             const std::vector<Int>& full_dims, uint64_t seed) {
    std::vector<VerifyRow> rows;
    for (int d = 1; d <= d_max; ++d) {
        DimensionQuery q;
        q.n = n;
        q.degree = d;
        q.trace_zero = trace_zero;
        q.seed = seed + uint64_t(d) * 1000003;
        DimensionResult r = graded_dimension(gens, q);
        VerifyRow row;
        row.degree = d;
        row.columns = r.columns;
        row.subalgebra_dim = r.dimension;
        row.full_dim = d < int(full_dims.size()) ? full_dims[size_t(d)] : Int(-1);
        row.ok = (row.full_dim >= 0) && (Int(row.subalgebra_dim) == row.full_dim);
        rows.push_back(row);
    }
    return rows;
}

} // namespace tracealg
