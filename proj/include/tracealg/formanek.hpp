#pragma once

#include <map>

#include "tracealg/characters.hpp"
#include "tracealg/trunc_series.hpp"

namespace tracealg::formanek {

// Degree-k piece of the series, decomposed over two-row Schur functions
// f_{p,q} with p >= q >= 0, p + q = k.  Coefficients are Kronecker
// multiplicities, hence nonnegative.
struct SchurExpansion {
    int k = 0;
    std::map<std::pair<int, int>, Int> coeffs;
};

struct Expansion {
    std::vector<SchurExpansion> by_degree; // degrees 0..D
    TruncSeries bigraded;                  // coefficients of s^a t^b
    TruncSeries single;                    // coefficients of t^k
};

// Pure trace algebra of two generic n x n matrices: the degree-k component
// decomposes as sum over mu |- k with at most n rows of the Kronecker square
// of chi^mu, projected to two-row Schur functions.
Expansion pure(int n, int D);

// Mixed trace algebra: same with the degree-(k+1) character restricted to
// S_k, evaluated as a class function at the cycle type with a fixed point
// appended.
Expansion mixed(int n, int D);

// Expansions of prod_{k>=1} 1/(1-2t^k) and of
// 1/(1-2t)^2 * prod_{k>=2} 1/(1-2t^k), to degree D.
std::pair<TruncSeries, TruncSeries> limit_products(int D);

} // namespace tracealg::formanek
