#pragma once

#include <map>
#include <vector>

#include "tracealg/cyclotomic.hpp"
#include "tracealg/ratfn.hpp"
#include "tracealg/sparse_poly.hpp"

namespace tracealg {

// A denominator factor (1 - zeta^zp * u)^mult.  zp is a power of the ambient
// root of unity; it stays 0 throughout the integer-coefficient engine.
struct Factor {
    Monomial u;
    int zp = 0;
    bool operator<(const Factor& o) const { return zp != o.zp ? zp < o.zp : u < o.u; }
    bool operator==(const Factor& o) const { return zp == o.zp && u == o.u; }
};

using FactorMap = std::map<Factor, int>;

// Ring adapters: the residue engine is generic over plain big integers
// (pure/mixed torus integrals, where only +-1 units occur) and cyclotomic
// rationals (the SL2 / diagonal-torus integrals).
struct IntRing {
    using K = Int;
    int zorder = 1;
    K one() const { return 1; }
    K zeta(int) const { return 1; }
    K from_int(long v) const { return v; }
    static K unit_pow(const K& u, long k) { return int_unit_pow(u, k); }
    static bool is_rational_integer(const K&) { return true; }
};

struct CycRing {
    using K = Cyc;
    const CycCtx* ctx;
    int zorder;
    explicit CycRing(int order) : ctx(&CycCtx::get(order)), zorder(order) {}
    K one() const { return Cyc(1); }
    K zeta(int k) const { return Cyc::zeta(*ctx, k); }
    K from_int(long v) const { return Cyc(int(v)); }
    static K unit_pow(const K& u, long k) { return u.pow(k); }
    static bool is_rational_integer(const K& v) {
        return v.is_rational() && boost::multiprecision::denominator(v.rational_value()) == 1;
    }
};

template <class Ring>
struct FTerm {
    using K = typename Ring::K;
    SparsePoly<K> num;
    FactorMap den;
};

template <class Ring>
class ResidueEngine {
  public:
    using K = typename Ring::K;
    using P = SparsePoly<K>;
    using Term = FTerm<Ring>;

    ResidueEngine(Ring ring, VarCtx ctx) : ring_(ring), ctx_(std::move(ctx)) {}

    const VarCtx& var_ctx() const { return ctx_; }

    // Canonicalize denominator factor orientations; cancel binomials that
    // divide the numerator; constant factors (1 - zeta^m) divide into num.
    void normalize(Term& t) const;
    void reduce(Term& t) const;

    // Contour integral (1/2 pi i) \oint f dx_var / x_var over |x_var| = 1,
    // as the sum of residues at the poles inside.
    std::vector<Term> integrate(std::vector<Term> terms, int var) const;

    // Sum a term list over the least common denominator.
    Term combine(const std::vector<Term>& terms) const;

    // Merge terms that share an identical denominator multiset.
    std::vector<Term> merge_equal_dens(std::vector<Term> terms) const;

  private:
    Ring ring_;
    VarCtx ctx_;

    // Truncated power series in a local parameter h with a shared
    // denominator multiset: value(h) = sum nums[i] h^i / prod den.
    struct HSeries {
        std::vector<P> nums;
        FactorMap den;
    };

    HSeries hs_one(int ord) const {
        HSeries s;
        s.nums.assign(size_t(ord), P{});
        s.nums[0] = P(ring_.one());
        return s;
    }
    HSeries hs_mul(const HSeries& a, const HSeries& b, int ord) const;
    // (c0 + c1 h + ...)^{-1} where c0 = 1 - zeta^zp * w (w != 1) or an
    // invertible unit-monomial/constant; coefficients c_i are polynomials.
    HSeries hs_inverse(const std::vector<P>& c, int ord) const;

    Term residue_at_zero(const Term& t, int var) const;
    std::vector<Term> residues_at_poles(const Term& t, int var) const;

    K zeta_pow(long k) const {
        long m = ring_.zorder;
        return ring_.zeta(int(((k % m) + m) % m));
    }
};

extern template class ResidueEngine<IntRing>;
extern template class ResidueEngine<CycRing>;

// Brute-force truncated-series constant-term oracle: expands the integrand
// as a power series in the series variables (Laurent in the torus
// variables), multiplies factor by factor and projects the constant term in
// each integration variable once all factors involving it are absorbed.
// `integration_vars` are processed innermost first.
TruncSeries ct_series_oracle(const Poly& numerator, const std::vector<std::pair<Monomial, int>>& den,
                             const VarCtx& ctx, const std::vector<int>& integration_vars, int D);

} // namespace tracealg
