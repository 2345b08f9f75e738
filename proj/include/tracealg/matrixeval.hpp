#pragma once

#include <random>
#include <vector>

#include "tracealg/ints.hpp"
#include "tracealg/traceword.hpp"

namespace tracealg {

// Dense matrix over exact rationals.  Small and dedicated: the installed
// Eigen/boost combination rejects multiprecision scalars in its operator
// traits, and everything here is at most 6x6.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    RatMatrix operator*(const RatMatrix& o) const;
    Rat trace() const;
    RatMatrix inverse() const; // throws on singular input

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// A concrete evaluation point: a pair of n x n matrices with exact rational
// entries, optionally projected to trace zero.
struct SamplePoint {
    int n = 0;
    RatMatrix X, Y;
    bool trace_zero = false;
};

// Entries are integers in [-50, 50]; the trace-zero flag projects
// A <- A - (tr A / n) I, keeping entries exact rationals.
SamplePoint random_sample(int n, std::mt19937_64& rng, bool trace_zero);

Rat eval_trace(const TraceWord& w, const SamplePoint& p);
Rat eval_trace(const TraceElement& e, const SamplePoint& p);

// Conjugate both matrices by g (invariance checks).
SamplePoint conjugated(const SamplePoint& p, const RatMatrix& g);

// Modular mirror of the above: matrices as row-major uint64 arrays mod p.
struct ModSample {
    int n = 0;
    uint64_t p = 0;
    std::vector<uint64_t> X, Y;
};

ModSample reduce_mod(const SamplePoint& s, uint64_t p);
uint64_t eval_trace_mod(const TraceWord& w, const ModSample& s);
uint64_t eval_trace_mod(const TraceElement& e, const ModSample& s);

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p);

} // namespace tracealg
