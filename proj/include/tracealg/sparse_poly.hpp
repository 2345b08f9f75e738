#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tracealg/ints.hpp"
#include "tracealg/monomial.hpp"

namespace tracealg {

// Sparse multivariate Laurent polynomial with exact coefficients.  Terms are
// kept sorted by exponent vector; no zero coefficients are stored.
template <class C>
class SparsePoly {
  public:
    using Term = std::pair<Monomial, C>;

    SparsePoly() = default;
    explicit SparsePoly(C c) {
        if (!coeff_is_zero(c)) terms_.emplace_back(Monomial{}, std::move(c));
    }
    SparsePoly(C c, const Monomial& m) {
        if (!coeff_is_zero(c)) terms_.emplace_back(m, std::move(c));
    }

    static bool coeff_is_zero(const C& c) { return c == C(0); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    C coeff(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& k) { return t.first < k; });
        if (it != terms_.end() && it->first == m) return it->second;
        return C(0);
    }

    C constant_term() const { return coeff(Monomial{}); }

    void add_term(const Monomial& m, C c) {
        if (coeff_is_zero(c)) return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& k) { return t.first < k; });
        if (it != terms_.end() && it->first == m) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        } else {
            terms_.insert(it, {m, std::move(c)});
        }
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        while (a != terms_.end() && b != o.terms_.end()) {
            if (a->first < b->first) {
                out.push_back(std::move(*a++));
            } else if (b->first < a->first) {
                out.push_back(*b++);
            } else {
                C c = a->second + b->second;
                if (!coeff_is_zero(c)) out.emplace_back(a->first, std::move(c));
                ++a;
                ++b;
            }
        }
        out.insert(out.end(), std::make_move_iterator(a), std::make_move_iterator(terms_.end()));
        out.insert(out.end(), b, o.terms_.end());
        terms_ = std::move(out);
        return *this;
    }

    SparsePoly& operator-=(const SparsePoly& o) { return *this += o.negated(); }

    SparsePoly operator+(const SparsePoly& o) const {
        SparsePoly r = *this;
        r += o;
        return r;
    }
    SparsePoly operator-(const SparsePoly& o) const {
        SparsePoly r = *this;
        r -= o;
        return r;
    }

    SparsePoly negated() const {
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    SparsePoly operator*(const SparsePoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        const SparsePoly* a = this;
        const SparsePoly* b = &o;
        if (a->size() < b->size()) std::swap(a, b);
        std::unordered_map<Monomial, C, MonomialHash> acc;
        acc.reserve(a->size() * 2);
        for (const auto& tb : b->terms_)
            for (const auto& ta : a->terms_) acc[ta.first * tb.first] += ta.second * tb.second;
        return from_map(std::move(acc));
    }

    SparsePoly& operator*=(const SparsePoly& o) {
        *this = *this * o;
        return *this;
    }

    // Multiply by c * m.
    SparsePoly scaled(const C& c, const Monomial& m = Monomial{}) const {
        SparsePoly r;
        if (coeff_is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        return r;
    }

    bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    int min_exp(int var) const {
        int m = 0;
        bool first = true;
        for (const auto& t : terms_) {
            if (first || t.first.e[var] < m) m = t.first.e[var];
            first = false;
        }
        return m;
    }
    int max_exp(int var) const {
        int m = 0;
        bool first = true;
        for (const auto& t : terms_) {
            if (first || t.first.e[var] > m) m = t.first.e[var];
            first = false;
        }
        return m;
    }

    bool is_polynomial() const {
        for (const auto& t : terms_)
            for (int i = 0; i < Monomial::kMaxVars; ++i)
                if (t.first.e[i] < 0) return false;
        return true;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& t : terms_) {
            int s = 0;
            for (int i = 0; i < Monomial::kMaxVars; ++i) s += t.first.e[i];
            d = std::max(d, s);
        }
        return d;
    }

    // Sum of all coefficients, i.e. the value at every variable = 1.
    C value_at_one() const {
        C s(0);
        for (const auto& t : terms_) s += t.second;
        return s;
    }

    // Substitute variable `var` := unit * m, where `unit` must be invertible
    // (a sign or root of unity).  UnitPow(unit, k) supplies unit^k for k in Z.
    template <class UnitPow>
    SparsePoly substitute(int var, const C& unit, const Monomial& m, UnitPow unit_pow) const {
        std::unordered_map<Monomial, C, MonomialHash> acc;
        acc.reserve(terms_.size() * 2);
        for (const auto& t : terms_) {
            int k = t.first.e[var];
            Monomial nm = t.first;
            nm.e[var] = 0;
            nm = nm * m.pow(k);
            acc[nm] += t.second * unit_pow(unit, k);
        }
        return from_map(std::move(acc));
    }

    // Merge variable `from` into variable `to` (set x_from := x_to).
    SparsePoly merge_vars(int from, int to) const {
        std::unordered_map<Monomial, C, MonomialHash> acc;
        for (const auto& t : terms_) {
            Monomial nm = t.first;
            int k = nm.e[from];
            nm.e[from] = 0;
            nm.e[to] = int16_t(nm.e[to] + k);
            acc[nm] += t.second;
        }
        return from_map(std::move(acc));
    }

    // Scale every exponent of variable `var` by k (t -> t^k lifting).
    SparsePoly stretch_var(int var, int k) const {
        SparsePoly r = *this;
        for (auto& t : r.terms_) {
            long v = long(t.first.e[var]) * k;
            if (v < INT16_MIN || v > INT16_MAX) throw std::overflow_error("stretch overflow");
            t.first.e[var] = int16_t(v);
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        return r;
    }

    // Inverse of stretch_var; every exponent of `var` must be divisible by k.
    std::optional<SparsePoly> compress_var(int var, int k) const {
        SparsePoly r = *this;
        for (auto& t : r.terms_) {
            if (t.first.e[var] % k != 0) return std::nullopt;
            t.first.e[var] = int16_t(t.first.e[var] / k);
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        return r;
    }

    SparsePoly derivative(int var) const {
        SparsePoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            int k = t.first.e[var];
            if (k == 0) continue;
            Monomial nm = t.first;
            nm.e[var] = int16_t(k - 1);
            C c = t.second * C(k);
            if (!coeff_is_zero(c)) r.terms_.emplace_back(nm, std::move(c));
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        return r;
    }

    // Exact division by (1 - unit*w): groups terms into progressions along w
    // and runs synthetic division in each class.  Returns nullopt when the
    // division is not exact.
    std::optional<SparsePoly> divide_by_binomial(const C& unit, const Monomial& w) const {
        if (is_zero()) return SparsePoly{};
        int pivot = -1;
        for (int i = 0; i < Monomial::kMaxVars; ++i)
            if (w.e[i] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return std::nullopt; // w == 1 is not a valid divisor
        // Class representative: e - q*w with q = floor(e_pivot / w_pivot).
        struct Entry {
            long q;
            C c;
        };
        std::unordered_map<Monomial, std::vector<Entry>, MonomialHash> classes;
        for (const auto& t : terms_) {
            long q;
            long ep = t.first.e[pivot], wp = w.e[pivot];
            q = ep / wp;
            if ((ep % wp != 0) && ((ep < 0) != (wp < 0))) --q; // floor division
            Monomial rep = t.first * w.pow(-q);
            classes[rep].push_back({q, t.second});
        }
        SparsePoly out;
        std::unordered_map<Monomial, C, MonomialHash> acc;
        for (auto& [rep, entries] : classes) {
            std::sort(entries.begin(), entries.end(),
                      [](const Entry& a, const Entry& b) { return a.q < b.q; });
            // P(T) = sum c_i T^{q_i}; divide by (1 - unit*T).
            long qlo = entries.front().q;
            long qhi = entries.back().q;
            std::vector<C> dense(size_t(qhi - qlo + 1), C(0));
            for (auto& e : entries) dense[size_t(e.q - qlo)] = e.c;
            // Quotient degree qhi-1; synthetic: r_j = p_j + unit*r_{j-1}.
            C carry(0);
            for (long j = 0; j <= qhi - qlo; ++j) {
                C r = dense[size_t(j)] + unit * carry;
                if (j == qhi - qlo) {
                    if (!coeff_is_zero(r)) return std::nullopt; // remainder
                } else {
                    if (!coeff_is_zero(r)) acc[rep * w.pow(qlo + j)] += r;
                    carry = r;
                }
            }
        }
        return from_map(std::move(acc));
    }

    static SparsePoly from_map(std::unordered_map<Monomial, C, MonomialHash>&& acc) {
        SparsePoly r;
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!coeff_is_zero(c)) r.terms_.emplace_back(m, std::move(c));
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        return r;
    }

    static SparsePoly from_terms(std::vector<Term> ts) {
        std::unordered_map<Monomial, C, MonomialHash> acc;
        for (auto& [m, c] : ts) acc[m] += c;
        return from_map(std::move(acc));
    }

  private:
    std::vector<Term> terms_;
};

using Poly = SparsePoly<Int>;

inline Poly one_minus(const Monomial& u) {
    Poly p(Int(1));
    p.add_term(u, Int(-1));
    return p;
}

// Int "units" are +-1.
inline Int int_unit_pow(const Int& u, long k) {
    if (u == 1) return 1;
    if (u == -1) return (k % 2 == 0) ? Int(1) : Int(-1);
    throw std::invalid_argument("not a unit");
}

// (s t)^d * p(1/s, 1/t, ...) over the leading `nsmall` variables.
template <class C>
SparsePoly<C> mirror_small(const SparsePoly<C>& p, int d, int nsmall) {
    std::vector<typename SparsePoly<C>::Term> ts;
    ts.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m = t.first;
        for (int i = 0; i < nsmall; ++i) m.e[i] = int16_t(d - m.e[i]);
        ts.emplace_back(m, t.second);
    }
    return SparsePoly<C>::from_terms(std::move(ts));
}

// Palindromy test: (st)^d N(1/s,1/t) == N(s,t) (or t^d N(1/t) == N(t)).
template <class C>
bool is_palindromic(const SparsePoly<C>& p, int d, int nsmall) {
    return mirror_small(p, d, nsmall) == p;
}

// Symmetry in the first two variables.
template <class C>
bool is_st_symmetric(const SparsePoly<C>& p) {
    std::vector<typename SparsePoly<C>::Term> ts;
    for (const auto& t : p.terms()) {
        Monomial m = t.first;
        std::swap(m.e[0], m.e[1]);
        ts.emplace_back(m, t.second);
    }
    return SparsePoly<C>::from_terms(std::move(ts)) == p;
}

} // namespace tracealg
