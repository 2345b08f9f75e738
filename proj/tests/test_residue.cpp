#include <doctest.h>

#include <random>

#include "tracealg/molien.hpp"
#include "tracealg/poly_io.hpp"
#include "tracealg/residue.hpp"

using namespace tracealg;

namespace {

// Contexts: s,t series variables plus one torus variable x.
VarCtx one_torus_ctx() { return VarCtx::bigraded(1); }

FTerm<IntRing> term_of(Poly num, std::vector<std::pair<Monomial, int>> den) {
    FTerm<IntRing> t;
    t.num = std::move(num);
    for (auto& [u, m] : den) t.den[Factor{u, 0}] += m;
    return t;
}

RatFn as_ratfn(const ResidueEngine<IntRing>& eng, std::vector<FTerm<IntRing>> terms) {
    auto total = eng.combine(terms);
    RatFn f;
    f.num = total.num;
    for (auto& [fac, m] : total.den) f.mul_den_factor(fac.u, m);
    return ratfn_reduce(std::move(f));
}

} // namespace

TEST_CASE("constant term of 1/(1 - s/x) is 1") {
    VarCtx ctx = one_torus_ctx();
    ResidueEngine<IntRing> eng(IntRing{}, ctx);
    Monomial s = Monomial::var(0), x = Monomial::var(2);
    auto t = term_of(Poly(Int(1)), {{s * x.inverse(), 1}});
    auto res = eng.integrate({t}, 2);
    RatFn f = as_ratfn(eng, res);
    CHECK(f.num == Poly(Int(1)));
    CHECK(f.den.empty());
}

TEST_CASE("constant term of 1/(1 - s x) is 1") {
    VarCtx ctx = one_torus_ctx();
    ResidueEngine<IntRing> eng(IntRing{}, ctx);
    Monomial s = Monomial::var(0), x = Monomial::var(2);
    auto t = term_of(Poly(Int(1)), {{s * x, 1}});
    auto res = eng.integrate({t}, 2);
    RatFn f = as_ratfn(eng, res);
    CHECK(f.num == Poly(Int(1)));
    CHECK(f.den.empty());
}

TEST_CASE("n=2 torus integral gives 1/((1+s)(1+t)(1-st)) after prefactor") {
    // (1-x)/phi_{1,1} integrated over |x|=1, then multiplied by the
    // 1/((1-s)^2(1-t)^2) prefactor, equals 1/Pi_2.
    RatFn f = molien::poincare_bigraded(2, molien::Variant::pure);
    CHECK(f.num == Poly(Int(1)));
    std::map<Monomial, int> want;
    Monomial s = Monomial::var(0), t = Monomial::var(1);
    want[s] = 1;
    want[t] = 1;
    want[s.pow(2)] = 1;
    want[t.pow(2)] = 1;
    want[s * t] = 1;
    CHECK(f.den == want);
}

TEST_CASE("residue extraction agrees with the series oracle on random one-variable integrands") {
    std::mt19937_64 rng(123321);
    VarCtx ctx = one_torus_ctx();
    ResidueEngine<IntRing> eng(IntRing{}, ctx);
    std::uniform_int_distribution<int> small(0, 2), sign(0, 1), nf(2, 4);
    const int D = 12;
    for (int trial = 0; trial < 24; ++trial) {
        std::vector<std::pair<Monomial, int>> den;
        int k = nf(rng);
        bool ok = false;
        for (int i = 0; i < k; ++i) {
            Monomial u;
            u.e[0] = int16_t(small(rng));
            u.e[1] = int16_t(small(rng));
            if (u.e[0] + u.e[1] == 0) u.e[1] = 1;
            u.e[2] = int16_t(sign(rng) ? 1 : -1);
            if (u.e[2] < 0) ok = true;
            den.emplace_back(u, 1);
        }
        if (!ok) {
            Monomial u;
            u.e[1] = 1;
            u.e[2] = -1;
            den.emplace_back(u, 1);
        }
        Poly num(Int(1));
        num.add_term(Monomial::var(2), Int(trial % 3) - 1); // 1 + c x
        auto res = eng.integrate({term_of(num, den)}, 2);
        RatFn f = as_ratfn(eng, res);
        TruncSeries exact = ratfn_expand(f, ctx, D);
        TruncSeries oracle = ct_series_oracle(num, den, ctx, {2}, D);
        CHECK(exact.agrees_with(oracle, D));
    }
}

TEST_CASE("repeated poles: higher-order residues match the oracle") {
    VarCtx ctx = one_torus_ctx();
    ResidueEngine<IntRing> eng(IntRing{}, ctx);
    Monomial s = Monomial::var(0), t = Monomial::var(1), x = Monomial::var(2);
    // 1/((1 - s/x)^3 (1 - t x)^2): triple pole at x = s.
    auto tm = term_of(Poly(Int(1)), {{s * x.inverse(), 3}, {t * x, 2}});
    auto res = eng.integrate({tm}, 2);
    RatFn f = as_ratfn(eng, res);
    TruncSeries exact = ratfn_expand(f, ctx, 10);
    TruncSeries oracle =
        ct_series_oracle(Poly(Int(1)), {{s * x.inverse(), 3}, {t * x, 2}}, ctx, {2}, 10);
    CHECK(exact.agrees_with(oracle, 10));
}

TEST_CASE("unit-circle poles must cancel or raise") {
    VarCtx ctx = one_torus_ctx();
    ResidueEngine<IntRing> eng(IntRing{}, ctx);
    Monomial s = Monomial::var(0), x = Monomial::var(2);
    // (1-x) / ((1-x)(1-s/x)): the circle pole cancels against the numerator.
    auto good = term_of(one_minus(x), {{x, 1}, {s * x.inverse(), 1}});
    CHECK_NOTHROW(eng.integrate({good}, 2));
    // 1 / (1-x)(1 - s/x): genuine pole on the contour.
    auto bad = term_of(Poly(Int(1)), {{x, 1}, {s * x.inverse(), 1}});
    CHECK_THROWS_AS(eng.integrate({bad}, 2), std::domain_error);
}
