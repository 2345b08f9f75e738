#pragma once

#include <map>
#include <string>
#include <vector>

#include "tracealg/ratfn.hpp"
#include "tracealg/trunc_series.hpp"

namespace tracealg::tables {

// Location of the fixture files; overridable with TRACEALG_DATA_DIR.
std::string data_dir();

// Denominator of the bigraded series in factored form:
//   prod_{i=1}^{n} (1-s^i)(1-t^i) prod_{j=1}^{i-1} (1-s^{i-j} t^j)^{min(i, n+1-i)}
std::map<Monomial, int> pi_factors(int n);
// D for the pure algebra: Pi_n for n <= 5, (1-st) Pi_6 for n = 6.
std::map<Monomial, int> pure_den_factors(int n);
// D for the mixed algebra: the pure D with (1-s^n)(1-t^n) replaced by
// (1-s)(1-t).
std::map<Monomial, int> mixed_den_factors(int n);

// Bigraded numerators from the published tables; n = 6 is assembled from
// its compact parts.  kind is 'c' (pure) or 't' (mixed).
Poly bigraded_num(char kind, int n);
RatFn bigraded(char kind, int n);

// Assembly of the n=6 numerators from the compact pieces; validates the
// stated term counts (1169 pure, 854 mixed).
Poly assembled_numerator(char kind);

// Rational function plus an optional extra (non-binomial) denominator
// polynomial, as needed by one of the published lowest-terms forms.
struct FixtureRatFn {
    RatFn fn;
    Poly den_extra; // constant term 1; empty means none
    TruncSeries expand(const VarCtx& ctx, int D) const;
};

FixtureRatFn single_graded(char kind, int n); // lowest-terms N/D in t
FixtureRatFn star_single(char kind, int n);   // nonnegative extended forms
Poly star_multiplier(char kind, int n);       // N* = multiplier * N
FixtureRatFn star_bigraded(int n);            // extended bigraded forms, n=3,4
FixtureRatFn sharp(int n);                    // SL2-invariant subalgebra, n=2..5
FixtureRatFn bullet(int n);                   // torus-invariant subalgebra, n=1..5
Poly gcd_fixture(int n);                      // published gcd(N(t,t), D(t,t))

// Taylor coefficient tables keyed by n:
//   "c", "c0", "t" to degree 19; "sharp", "bullet" to degree 25.
const std::map<int, std::vector<Int>>& taylor(const std::string& family);

// Coefficient tables with the stabilized extension rows.
const std::vector<std::vector<Int>>& table_c_coeffs();  // rows n=0..12, k=0..12
const std::vector<std::vector<Int>>& table_t_coeffs();  // rows n=0..6, k=0..12
const std::vector<Int>& alpha_sequence();               // second differences
const std::map<std::pair<int, int>, Int>& schur_c52();  // (p,q) -> coefficient
const std::vector<int>& generator_degree_counts();      // n=4 minimal set, by degree

} // namespace tracealg::tables
