#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "tracealg/sparse_poly.hpp"
#include "tracealg/trunc_series.hpp"

namespace tracealg {

// Rational function in factored Van den Bergh form:
//     num / prod_{(u,m) in den} (1 - u)^m
// with every denominator monomial u of positive size (positive total degree
// in the series variables, or the tie-break for Laurent intermediates).
struct RatFn {
    Poly num;
    std::map<Monomial, int> den;

    static RatFn from_poly(Poly p) { return {std::move(p), {}}; }

    bool operator==(const RatFn& o) const { return num == o.num && den == o.den; }

    Poly den_expanded() const {
        Poly d(Int(1));
        for (auto& [u, m] : den)
            for (int i = 0; i < m; ++i) d *= one_minus(u);
        return d;
    }

    void mul_den_factor(const Monomial& u, int m = 1) {
        auto it = den.find(u);
        if (it == den.end())
            den[u] = m;
        else if ((it->second += m) == 0)
            den.erase(it);
    }

    // Equality as rational functions, by cross-multiplication.
    bool same_value(const RatFn& o) const {
        return num * o.den_expanded() == o.num * den_expanded();
    }
};

// Maclaurin expansion to total degree D in the series variables.  Every
// denominator monomial must be a genuine polynomial monomial of positive
// total degree in those variables.
inline TruncSeries poly_to_series(const Poly& p, const VarCtx& ctx, int D) {
    TruncSeries s(ctx.small_count, D);
    for (auto& [m, c] : p.terms()) {
        TruncSeries::Key k{m.e[0], ctx.small_count > 1 ? m.e[1] : 0};
        for (int i = 0; i < Monomial::kMaxVars; ++i)
            if (m.e[i] < 0 || (i >= ctx.small_count && m.e[i] != 0))
                throw std::domain_error("series expansion of a non-polynomial value");
        s.add(k, c);
    }
    return s;
}

inline TruncSeries ratfn_expand(const RatFn& f, const VarCtx& ctx, int D) {
    TruncSeries acc = poly_to_series(f.num, ctx, D);
    for (auto& [u, mult] : f.den) {
        int deg = 0;
        for (int i = 0; i < ctx.small_count; ++i) {
            if (u.e[i] < 0) throw std::domain_error("denominator monomial with negative exponent");
            deg += u.e[i];
        }
        for (int i = ctx.small_count; i < Monomial::kMaxVars; ++i)
            if (u.e[i] != 0) throw std::domain_error("denominator monomial with torus variable");
        if (deg == 0) throw std::domain_error("denominator factor of total degree zero");
        // (1-u)^{-mult} = sum_j C(j+mult-1, mult-1) u^j
        TruncSeries g(ctx.small_count, D);
        for (int j = 0; j * deg <= D; ++j) {
            Monomial uj = u.pow(j);
            g.add({uj.e[0], ctx.small_count > 1 ? uj.e[1] : 0}, binomial(j + mult - 1, mult - 1));
        }
        acc = acc * g;
    }
    return acc;
}

// Cancels common factors between numerator and denominator.  Works on the
// cyclotomic-atom decomposition of the binomial denominator: each factor
// (1-v^r) splits into (1-v) and the cyclotomic polynomials Phi_d(v), d | r,
// d > 1; atoms dividing the numerator are cancelled greedily (largest d
// first) as long as the remaining atoms still reassemble into a product of
// binomials.  Returns a fixed point: "irreducible by available factors".
RatFn ratfn_reduce(RatFn f);

// Same, also returning the product of all cancelled factors (the gcd pulled
// out of the fraction, up to the reachable moves).
std::pair<RatFn, Poly> ratfn_reduce_tracked(RatFn f);

// Exact evaluation at integer points; used as the probabilistic
// value-preservation certificate for reductions.
inline Rat ratfn_value_at(const RatFn& f, const std::vector<Int>& point) {
    auto mono_val = [&](const Monomial& m) {
        Rat v(1);
        for (int i = 0; i < int(point.size()); ++i) {
            if (m.e[i] == 0) continue;
            Rat p(point[size_t(i)]);
            Rat pw(1);
            for (int k = 0; k < std::abs(int(m.e[i])); ++k) pw *= p;
            if (m.e[i] < 0) pw = 1 / pw;
            v *= pw;
        }
        return v;
    };
    Rat n(0);
    for (auto& [m, c] : f.num.terms()) n += Rat(c) * mono_val(m);
    Rat d(1);
    for (auto& [u, mult] : f.den) {
        Rat base = 1 - mono_val(u);
        if (base == 0) throw std::domain_error("evaluation point hits a pole");
        for (int k = 0; k < mult; ++k) d *= base;
    }
    return n / d;
}

inline bool ratfn_values_agree(const RatFn& a, const RatFn& b, int nvars) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    std::vector<Int> p1, p2;
    for (int i = 0; i < nvars; ++i) {
        p1.push_back(primes[i]);
        p2.push_back(primes[nvars + i]);
    }
    return ratfn_value_at(a, p1) == ratfn_value_at(b, p1) &&
           ratfn_value_at(a, p2) == ratfn_value_at(b, p2);
}

// Set s := t.  The single-graded result lives in variable slot 0.
inline RatFn ratfn_single_graded(const RatFn& f) {
    RatFn r;
    r.num = f.num.merge_vars(1, 0);
    for (auto& [u, m] : f.den) {
        Monomial nu = u;
        nu.e[0] = int16_t(nu.e[0] + nu.e[1]);
        nu.e[1] = 0;
        r.mul_den_factor(nu, m);
    }
    return r;
}

} // namespace tracealg
