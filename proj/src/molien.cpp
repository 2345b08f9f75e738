#include "tracealg/molien.hpp"

#include <numeric>
#include <stdexcept>

namespace tracealg::molien {

namespace {

Monomial torus_product(int k, int r) {
    // x_k x_{k+1} ... x_r as a monomial; torus variable x_i sits at slot i+1.
    Monomial m;
    for (int i = k; i <= r; ++i) m.e[i + 1] = 1;
    return m;
}

RatFn finish(FTerm<IntRing> total, const VarCtx& ctx) {
    RatFn f;
    f.num = total.num;
    for (auto& [fac, m] : total.den) {
        if (fac.zp != 0) throw std::logic_error("root of unity escaped the integer engine");
        if (size_sign(fac.u, ctx) <= 0) throw std::logic_error("non-shrinking denominator factor");
        f.mul_den_factor(fac.u, m);
    }
    f = ratfn_reduce(std::move(f));
    if (!f.num.is_polynomial()) throw std::logic_error("reduced numerator is not polynomial");
    if (f.num.constant_term() != 1) throw std::logic_error("numerator not normalized");
    return f;
}

std::vector<int> default_order(int n) {
    std::vector<int> ord;
    for (int i = n - 1; i >= 1; --i) ord.push_back(i);
    return ord;
}

} // namespace

Integrand build_bigraded_integrand(int n, Variant v) {
    Integrand ig;
    ig.ctx = VarCtx::bigraded(n - 1);
    Monomial s = Monomial::var(0);
    Monomial t = Monomial::var(1);
    ig.num = Poly(Int(1));
    for (int k = 1; k <= n - 1; ++k)
        for (int r = k; r <= n - 1; ++r) {
            Monomial X = torus_product(k, r);
            ig.num *= one_minus(X);
            ig.den.emplace_back(s * X, 1);
            ig.den.emplace_back(t * X, 1);
            ig.den.emplace_back(s * X.inverse(), 1);
            ig.den.emplace_back(t * X.inverse(), 1);
        }
    if (v == Variant::mixed) {
        Poly w{Int(n)};
        for (int k = 1; k <= n - 1; ++k)
            for (int r = k; r <= n - 1; ++r) {
                Monomial X = torus_product(k, r);
                w.add_term(X, 1);
                w.add_term(X.inverse(), 1);
            }
        ig.num *= w;
    }
    ig.den.emplace_back(s, n);
    ig.den.emplace_back(t, n);
    for (int i = n - 1; i >= 1; --i) ig.integration_vars.push_back(i + 1);
    return ig;
}

RatFn poincare_bigraded(int n, Variant v, const std::vector<int>& order) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    Integrand ig = build_bigraded_integrand(n, v);
    std::vector<int> ord = order.empty() ? default_order(n) : order;
    ResidueEngine<IntRing> eng(IntRing{}, ig.ctx);
    FTerm<IntRing> t0;
    t0.num = ig.num;
    for (auto& [u, m] : ig.den) t0.den[Factor{u, 0}] += m;
    std::vector<FTerm<IntRing>> terms{t0};
    for (int xi : ord) {
        if (xi < 1 || xi > n - 1) throw std::invalid_argument("bad integration order");
        terms = eng.integrate(std::move(terms), xi + 1);
    }
    return finish(eng.combine(terms), ig.ctx);
}

TruncSeries poincare_bigraded_series(int n, Variant v, int D, const std::vector<int>& order) {
    Integrand ig = build_bigraded_integrand(n, v);
    std::vector<int> ord = order.empty() ? default_order(n) : order;
    std::vector<int> vars;
    for (int xi : ord) vars.push_back(xi + 1);
    return ct_series_oracle(ig.num, ig.den, ig.ctx, vars, D);
}

namespace {

// psi-part context for the SL2 integral: t at slot 0, y at slot 1, torus
// variables x_1..x_{n-1} at slots 2..n.
struct SharpIntegrand {
    VarCtx ctx;
    Poly num;
    std::vector<std::pair<Monomial, int>> den;
    std::vector<int> x_vars;
};

SharpIntegrand build_sharp_integrand(int n) {
    SharpIntegrand ig;
    ig.ctx.names = {"t", "y"};
    for (int i = 1; i <= n - 1; ++i) ig.ctx.names.push_back("x" + std::to_string(i));
    ig.ctx.small_count = 1;
    ig.ctx.tie_index = 0;
    Monomial t = Monomial::var(0);
    Monomial y = Monomial::var(1);
    ig.num = Poly(Int(1));
    for (int k = 1; k <= n - 1; ++k)
        for (int r = k; r <= n - 1; ++r) {
            Monomial X;
            for (int i = k; i <= r; ++i) X.e[i + 1] = 1;
            ig.num *= one_minus(X);
            ig.den.emplace_back(t * y * X, 1);
            ig.den.emplace_back(t * y.inverse() * X, 1);
            ig.den.emplace_back(t * y * X.inverse(), 1);
            ig.den.emplace_back(t * y.inverse() * X.inverse(), 1);
        }
    for (int i = n - 1; i >= 1; --i) ig.x_vars.push_back(i + 1);
    return ig;
}

// Root-of-unity order and t-stretch needed so every pole of the final
// one-variable integral is an honest monomial times a root of unity.
void scan_roots(const FactorMap& den, int var, int tvar, int& M, int& L) {
    M = 1;
    L = 1;
    for (auto& [f, m] : den) {
        int e = f.u.e[var];
        if (e == 0) continue;
        int k = std::abs(e);
        if (k == 1) continue;
        M = std::lcm(M, k);
        int c = std::abs(int(f.u.e[tvar]));
        int g = std::gcd(k, c == 0 ? k : c);
        L = std::lcm(L, k / g);
    }
}

FTerm<CycRing> lift_to_cyc(const FTerm<IntRing>& t, const CycRing& ring, int tvar, int L) {
    FTerm<CycRing> out;
    std::vector<SparsePoly<Cyc>::Term> ts;
    for (auto& [m, c] : t.num.terms()) ts.emplace_back(m, Cyc(c));
    out.num = SparsePoly<Cyc>::from_terms(std::move(ts)).stretch_var(tvar, L);
    for (auto& [f, m] : t.den) {
        Factor nf = f;
        nf.u.e[tvar] = int16_t(nf.u.e[tvar] * L);
        out.den[nf] += m;
    }
    return out;
}

// Replace every factor (1 - zeta^zp w), zp != 0, by (1 - w^r) while folding
// the complementary orbit members into the numerator.
void clear_roots_of_unity(FTerm<CycRing>& t, const CycRing& ring) {
    bool again = true;
    while (again) {
        again = false;
        for (auto it = t.den.begin(); it != t.den.end(); ++it) {
            if (it->first.zp == 0) continue;
            Factor f = it->first;
            int mult = it->second;
            int M = ring.zorder;
            int g = std::gcd(M, f.zp);
            int r = M / g;
            for (int rep = 0; rep < mult; ++rep)
                for (int i = 0; i < r; ++i) {
                    int zp = i * g;
                    if (zp == f.zp) continue;
                    SparsePoly<Cyc> fp(Cyc(1));
                    fp.add_term(f.u, -Cyc::zeta(*ring.ctx, zp));
                    t.num *= fp;
                }
            t.den.erase(it);
            t.den[Factor{f.u.pow(r), 0}] += mult;
            again = true;
            break;
        }
    }
}

RatFn finish_cyc(FTerm<CycRing> total, const CycRing& ring, const VarCtx& ctx, int tvar, int L) {
    clear_roots_of_unity(total, ring);
    RatFn f;
    std::vector<Poly::Term> ts;
    for (auto& [m, c] : total.num.terms()) {
        if (!c.is_rational()) throw std::logic_error("irrational coefficient in final result");
        Rat v = c.rational_value();
        if (boost::multiprecision::denominator(v) != 1)
            throw std::logic_error("non-integral coefficient in final result");
        ts.emplace_back(m, Int(boost::multiprecision::numerator(v)));
    }
    f.num = Poly::from_terms(std::move(ts));
    for (auto& [fac, m] : total.den) {
        if (fac.zp != 0) throw std::logic_error("residual root of unity");
        f.mul_den_factor(fac.u, m);
    }
    f = ratfn_reduce(std::move(f));
    if (L > 1) {
        auto cnum = f.num.compress_var(tvar, L);
        if (!cnum) throw std::logic_error("result not a series in the original variable");
        std::map<Monomial, int> nden;
        for (auto& [u, m] : f.den) {
            if (u.e[tvar] % L != 0) throw std::logic_error("denominator not in the original variable");
            Monomial nu = u;
            nu.e[tvar] = int16_t(nu.e[tvar] / L);
            nden[nu] += m;
        }
        f.num = std::move(*cnum);
        f.den = std::move(nden);
    }
    if (!f.num.is_polynomial()) throw std::logic_error("reduced numerator is not polynomial");
    if (f.num.constant_term() != 1) throw std::logic_error("numerator not normalized");
    return f;
}

} // namespace

RatFn poincare_sharp(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    SharpIntegrand ig = build_sharp_integrand(n);
    ResidueEngine<IntRing> eng(IntRing{}, ig.ctx);
    FTerm<IntRing> t0;
    t0.num = ig.num;
    for (auto& [u, m] : ig.den) t0.den[Factor{u, 0}] += m;
    std::vector<FTerm<IntRing>> terms{t0};
    for (int v : ig.x_vars) terms = eng.integrate(std::move(terms), v);

    // Outer integral: (1-y^2) psi(y) / ((1-t y)^n (1-t/y)^n) dy/y.
    Monomial t = Monomial::var(0);
    Monomial y = Monomial::var(1);
    Poly w{Int(1)};
    w.add_term(y.pow(2), -1);
    for (auto& tm : terms) {
        tm.num *= w;
        tm.den[Factor{t * y, 0}] += n;
        tm.den[Factor{t * y.inverse(), 0}] += n;
    }
    // Determine the cyclotomic order and t-stretch, then finish over Q(zeta).
    int M = 1, L = 1;
    for (auto& tm : terms) {
        int tm_M, tm_L;
        scan_roots(tm.den, 1, 0, tm_M, tm_L);
        M = std::lcm(M, tm_M);
        L = std::lcm(L, tm_L);
    }
    M = std::lcm(M, 2); // orientation flips may need -1
    CycRing ring(M);
    VarCtx cctx = ig.ctx;
    ResidueEngine<CycRing> ceng(ring, cctx);
    std::vector<FTerm<CycRing>> cterms;
    for (auto& tm : terms) cterms.push_back(lift_to_cyc(tm, ring, 0, L));
    cterms = ceng.integrate(std::move(cterms), 1);
    return finish_cyc(ceng.combine(cterms), ring, cctx, 0, L);
}

TruncSeries poincare_sharp_series(int n, int D) {
    SharpIntegrand ig = build_sharp_integrand(n);
    Monomial t = Monomial::var(0);
    Monomial y = Monomial::var(1);
    Poly w{Int(1)};
    w.add_term(y.pow(2), -1);
    ig.num *= w;
    ig.den.emplace_back(t * y, n);
    ig.den.emplace_back(t * y.inverse(), n);
    std::vector<int> vars = ig.x_vars;
    vars.push_back(1); // y last
    return ct_series_oracle(ig.num, ig.den, ig.ctx, vars, D);
}

RatFn poincare_bullet(const RatFn& bigraded) {
    // Substitute s -> t/z, t -> tz into the bigraded function; integrate z.
    VarCtx ctx;
    ctx.names = {"t", "z"};
    ctx.small_count = 1;
    ctx.tie_index = 0;
    auto subst = [&](const Monomial& m) {
        Monomial r;
        r.e[0] = int16_t(m.e[0] + m.e[1]);
        r.e[1] = int16_t(m.e[1] - m.e[0]);
        return r;
    };
    FTerm<IntRing> t0;
    {
        std::vector<Poly::Term> ts;
        for (auto& [m, c] : bigraded.num.terms()) ts.emplace_back(subst(m), c);
        t0.num = Poly::from_terms(std::move(ts));
        for (auto& [u, m] : bigraded.den) t0.den[Factor{subst(u), 0}] += m;
    }
    int M = 1, L = 1;
    scan_roots(t0.den, 1, 0, M, L);
    M = std::lcm(M, 2);
    CycRing ring(M);
    ResidueEngine<CycRing> ceng(ring, ctx);
    auto cterm = lift_to_cyc(t0, ring, 0, L);
    auto cterms = ceng.integrate({cterm}, 1);
    return finish_cyc(ceng.combine(cterms), ring, ctx, 0, L);
}

TruncSeries bullet_series_from_bigraded(const TruncSeries& bi) {
    TruncSeries out(1, bi.max_total_degree());
    for (auto& [k, v] : bi.coeffs())
        if (k[0] == k[1]) out.add({k[0] + k[1], 0}, v);
    return out;
}

} // namespace tracealg::molien
