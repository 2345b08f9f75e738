#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tracealg/matrixeval.hpp"
#include "tracealg/traceword.hpp"

namespace tracealg {

struct GeneratorSet {
    std::string name;
    std::vector<TraceElement> elements;
};

// Rank of a matrix over F_p (in place).
int rank_mod_p(std::vector<std::vector<uint64_t>>& m, uint64_t p);

// Fraction-free (Bareiss) rank over the integers; exact, for oracle use at
// small sizes.
int rank_exact(std::vector<std::vector<Int>> m);

struct RankDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dimension of the degree-d homogeneous component of the subalgebra
// generated by `gens` inside the trace algebra (full algebra when `gens`
// spans all trace words), computed as the rank of the random-evaluation
// matrix with #columns + margin sample rows.  Runs two independent seeds
// with distinct primes; disagreement throws RankDisagreement.
struct DimensionQuery {
    int n = 4;
    int degree = 0;
    bool trace_zero = false;
    uint64_t seed = 1;
    int margin = 10;
    bool exact_oracle = false; // also run Bareiss on seed 1 and compare
};

struct DimensionResult {
    int columns = 0;
    int dimension = 0;
};

DimensionResult graded_dimension(const std::vector<TraceElement>& gens, const DimensionQuery& q);

// Full-algebra generators: every cyclic word of length min_len..degree.
std::vector<TraceElement> full_algebra_generators(int degree, bool trace_zero);

struct VerifyRow {
    int degree;
    long columns;
    long subalgebra_dim;
    Int full_dim;
    bool ok;
};

// Per-degree comparison of the subalgebra dimension against the full
// dimension supplied by the series engines.
std::vector<VerifyRow> verify_generating_set(const std::vector<TraceElement>& gens, int n,
                                             int d_max, bool trace_zero,
                                             const std::vector<Int>& full_dims, uint64_t seed);

} // namespace tracealg
