#include <doctest.h>

#include <map>
#include <random>
#include <sstream>

#include "tracealg/poly_io.hpp"
#include "tracealg/ratfn.hpp"

using namespace tracealg;

namespace {

Poly parse(const std::string& text) {
    std::istringstream in(text);
    return parse_ratfn_text(in).num;
}

Poly st_poly(std::initializer_list<std::tuple<long, int, int>> terms) {
    std::vector<Poly::Term> ts;
    for (auto& [c, a, b] : terms) {
        Monomial m;
        m.e[0] = int16_t(a);
        m.e[1] = int16_t(b);
        ts.emplace_back(m, Int(c));
    }
    return Poly::from_terms(std::move(ts));
}

Poly random_poly(std::mt19937_64& rng, int nterms, int nvars, int maxexp, long maxcoeff) {
    std::uniform_int_distribution<int> ed(-maxexp, maxexp);
    std::uniform_int_distribution<long> cd(-maxcoeff, maxcoeff);
    std::vector<Poly::Term> ts;
    for (int i = 0; i < nterms; ++i) {
        Monomial m;
        for (int v = 0; v < nvars; ++v) m.e[v] = int16_t(ed(rng));
        ts.emplace_back(m, Int(cd(rng)));
    }
    return Poly::from_terms(std::move(ts));
}

// Quadratic-loop reference product kept independent of SparsePoly::operator*.
Poly brute_mul(const Poly& a, const Poly& b) {
    std::map<Monomial, Int> acc;
    for (auto& ta : a.terms())
        for (auto& tb : b.terms()) {
            Monomial m;
            for (int i = 0; i < Monomial::kMaxVars; ++i)
                m.e[i] = int16_t(ta.first.e[i] + tb.first.e[i]);
            acc[m] += ta.second * tb.second;
        }
    std::vector<Poly::Term> ts;
    for (auto& [m, c] : acc)
        if (c != 0) ts.emplace_back(m, c);
    return Poly::from_terms(std::move(ts));
}

} // namespace

TEST_CASE("polynomial product basics") {
    Poly a = st_poly({{1, 0, 0}, {-1, 1, 1}});            // 1 - st
    Poly b = st_poly({{1, 0, 0}, {1, 1, 1}});             // 1 + st
    CHECK(a * b == st_poly({{1, 0, 0}, {-1, 2, 2}}));     // 1 - s^2 t^2

    Poly c = st_poly({{1, 0, 0}, {-1, 1, 1}, {1, 2, 2}}); // 1 - st + s^2 t^2
    CHECK(c * b == st_poly({{1, 0, 0}, {1, 3, 3}}));      // 1 + s^3 t^3
}

TEST_CASE("random products agree with the quadratic-loop oracle") {
    std::mt19937_64 rng(20240901);
    for (int trial = 0; trial < 8; ++trial) {
        Poly a = random_poly(rng, 20, 4, 6, 50);
        Poly b = random_poly(rng, 20, 4, 6, 50);
        CHECK(a * b == brute_mul(a, b));
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 5; ++trial) {
        Poly a = random_poly(rng, 10, 3, 4, 9);
        Poly b = random_poly(rng, 10, 3, 4, 9);
        Poly c = random_poly(rng, 10, 3, 4, 9);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("binomial division") {
    Monomial st;
    st.e[0] = st.e[1] = 1;
    Poly p = st_poly({{1, 0, 0}, {-1, 2, 2}}); // 1 - s^2t^2 = (1-st)(1+st)
    auto q = p.divide_by_binomial(Int(1), st);
    REQUIRE(q.has_value());
    CHECK(*q == st_poly({{1, 0, 0}, {1, 1, 1}}));
    Poly r = st_poly({{1, 0, 0}, {1, 2, 2}});
    CHECK(!r.divide_by_binomial(Int(1), st).has_value());
}

TEST_CASE("series expansion of rational functions") {
    // 1/(1-t)^2 expands with coefficients 1,2,3,...
    VarCtx ctx = VarCtx::single();
    RatFn f = RatFn::from_poly(Poly(Int(1)));
    f.mul_den_factor(Monomial::var(0), 2);
    TruncSeries s = ratfn_expand(f, ctx, 5);
    for (int d = 0; d <= 5; ++d) CHECK(s.coeff1(d) == d + 1);

    RatFn one = RatFn::from_poly(Poly(Int(1)));
    TruncSeries s1 = ratfn_expand(one, ctx, 7);
    CHECK(s1.coeff1(0) == 1);
    for (int d = 1; d <= 7; ++d) CHECK(s1.coeff1(d) == 0);

    RatFn bad = RatFn::from_poly(Poly(Int(1)));
    bad.mul_den_factor(Monomial{}, 1); // degree-zero factor must be rejected
    CHECK_THROWS_AS(ratfn_expand(bad, ctx, 3), std::domain_error);
}

TEST_CASE("expansion is multiplicative") {
    std::mt19937_64 rng(4242);
    VarCtx ctx = VarCtx::bigraded(0);
    std::uniform_int_distribution<int> ed(0, 2);
    for (int trial = 0; trial < 4; ++trial) {
        RatFn f = RatFn::from_poly(random_poly(rng, 5, 2, 3, 7) * Poly(Int(1)));
        RatFn g = RatFn::from_poly(random_poly(rng, 5, 2, 3, 7));
        // make numerators polynomial: shift negatives away by squaring exps
        auto fix = [](RatFn h) {
            std::vector<Poly::Term> ts;
            for (auto& [m, c] : h.num.terms()) {
                Monomial n;
                n.e[0] = int16_t(std::abs(int(m.e[0])));
                n.e[1] = int16_t(std::abs(int(m.e[1])));
                ts.emplace_back(n, c);
            }
            h.num = Poly::from_terms(std::move(ts));
            return h;
        };
        f = fix(f);
        g = fix(g);
        Monomial s = Monomial::var(0), t = Monomial::var(1);
        f.mul_den_factor(s * t, 1 + trial % 2);
        g.mul_den_factor(t, 1);
        RatFn fg;
        fg.num = f.num * g.num;
        fg.den = f.den;
        for (auto& [u, m] : g.den) fg.mul_den_factor(u, m);
        TruncSeries lhs = ratfn_expand(fg, ctx, 9);
        TruncSeries rhs = ratfn_expand(f, ctx, 9) * ratfn_expand(g, ctx, 9);
        CHECK(lhs.agrees_with(rhs, 9));
    }
}

TEST_CASE("reduce cancels constructed factors") {
    // (1-s^2t^2)/(1-st) -> 1+st
    Monomial st;
    st.e[0] = st.e[1] = 1;
    RatFn f;
    f.num = st_poly({{1, 0, 0}, {-1, 2, 2}});
    f.mul_den_factor(st, 1);
    RatFn r = ratfn_reduce(f);
    CHECK(r.den.empty());
    CHECK(r.num == st_poly({{1, 0, 0}, {1, 1, 1}}));
}

TEST_CASE("construct-then-reduce recovers a random polynomial") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        Poly p = random_poly(rng, 6, 2, 3, 5);
        // force nonnegative exponents and constant term 1
        std::vector<Poly::Term> ts{{Monomial{}, Int(1)}};
        for (auto& [m, c] : p.terms()) {
            if (m.is_one()) continue;
            Monomial n;
            n.e[0] = int16_t(std::abs(int(m.e[0])));
            n.e[1] = int16_t(std::abs(int(m.e[1])));
            if (n.is_one()) continue;
            ts.emplace_back(n, c);
        }
        p = Poly::from_terms(std::move(ts));
        Monomial u;
        u.e[0] = 1;
        u.e[1] = 2;
        RatFn f;
        f.num = p * one_minus(u) * one_minus(u) * one_minus(u);
        f.mul_den_factor(u, 3);
        RatFn r = ratfn_reduce(f);
        CHECK(r.den.empty());
        CHECK(r.num == p);
        CHECK(ratfn_values_agree(f, r, 2));
    }
}

TEST_CASE("reduce pulls cyclotomic cofactors out of binomials") {
    // (1+t+t^2) / (1-t^3) -> 1/(1-t)
    Monomial t3 = Monomial::var(0, 3);
    RatFn f;
    f.num = Poly::from_terms({{Monomial{}, Int(1)},
                              {Monomial::var(0, 1), Int(1)},
                              {Monomial::var(0, 2), Int(1)}});
    f.mul_den_factor(t3, 1);
    RatFn r = ratfn_reduce(f);
    CHECK(r.num == Poly(Int(1)));
    REQUIRE(r.den.size() == 1);
    CHECK(r.den.begin()->first == Monomial::var(0, 1));
}

TEST_CASE("palindromy and symmetry checks") {
    Poly n3 = st_poly({{1, 0, 0}, {-1, 1, 1}, {1, 2, 2}});
    CHECK(is_palindromic(n3, 2, 2));
    CHECK(is_st_symmetric(n3));
    CHECK(is_palindromic(Poly(Int(1)), 0, 2));
    Poly asym = st_poly({{1, 0, 0}, {-1, 1, 0}});
    CHECK(!is_palindromic(asym, 2, 2));
}

TEST_CASE("text round trip") {
    Poly p = st_poly({{1, 0, 0}, {-7, 1, 2}, {3, 2, 2}});
    RatFn f = RatFn::from_poly(p);
    Monomial st;
    st.e[0] = st.e[1] = 1;
    f.mul_den_factor(st, 2);
    std::string text = ratfn_to_text(f, {"s", "t"});
    std::istringstream in(text);
    ParsedRatFn back = parse_ratfn_text(in);
    CHECK(back.num == p);
    CHECK(back.den.at(st) == 2);
    CHECK(back.var_names == std::vector<std::string>{"s", "t"});
}
