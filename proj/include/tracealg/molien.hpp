#pragma once

#include <vector>

#include "tracealg/ratfn.hpp"
#include "tracealg/residue.hpp"
#include "tracealg/trunc_series.hpp"

namespace tracealg::molien {

enum class Variant { pure, mixed };

// Torus integrand for the bigraded series of the (pure or mixed) trace
// algebra of two generic n x n matrices: the iterated contour integral runs
// over x_{n-1},...,x_1 and the prefactor 1/((1-s)(1-t))^n is carried in the
// denominator from the start.
struct Integrand {
    VarCtx ctx;
    Poly num;
    std::vector<std::pair<Monomial, int>> den;
    std::vector<int> integration_vars; // innermost first, as variable indices
};

Integrand build_bigraded_integrand(int n, Variant v);

// Exact bigraded Poincare series by iterated residues, reduced to lowest
// terms reachable by binomial cancellation.  `order`, when nonempty, lists
// the torus indices (1..n-1) in integration order, innermost first.
RatFn poincare_bigraded(int n, Variant v, const std::vector<int>& order = {});

// Independent series-expansion route (constant-term extraction on truncated
// power series); used as the oracle for the exact engine.
TruncSeries poincare_bigraded_series(int n, Variant v, int D, const std::vector<int>& order = {});

// SL2-invariant subalgebra: single outer integral of (1-y^2) psi(y) against
// the weight factors; exact for small n.
RatFn poincare_sharp(int n);
TruncSeries poincare_sharp_series(int n, int D);

// Diagonal-torus invariants: constant term in z of the bigraded series at
// (t/z, tz).  The bigraded input may be computed or loaded from fixtures.
RatFn poincare_bullet(const RatFn& bigraded);
// Weight-zero (equal-bidegree) extraction from a bigraded expansion.
TruncSeries bullet_series_from_bigraded(const TruncSeries& bi);

} // namespace tracealg::molien
