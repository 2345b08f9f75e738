#include <numeric>
#include <unordered_map>

#include "tracealg/cyclotomic.hpp"
#include "tracealg/ratfn.hpp"

namespace tracealg {

namespace {

// Atom polynomial in the primitive monomial v: (1-v) for d == 1, else
// Phi_d(v).  With this convention 1 - v^r = prod over d | r of atom(v, d).
Poly atom_poly(const Monomial& v, int d) {
    if (d == 1) return one_minus(v);
    Poly p;
    const auto& coeffs = cyclotomic_int(d);
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) p.add_term(v.pow(long(i)), coeffs[i]);
    return p;
}

// Exact division of p by a dense monic polynomial in the monomial direction
// v (low-first coefficients).  Groups terms into progressions along v and
// long-divides each class; nullopt when any class leaves a remainder.
std::optional<Poly> divide_by_dense_in_v(const Poly& p, const Monomial& v,
                                         const std::vector<Int>& divisor) {
    if (p.is_zero()) return Poly{};
    int pivot = -1;
    for (int i = 0; i < Monomial::kMaxVars; ++i)
        if (v.e[i] != 0) {
            pivot = i;
            break;
        }
    if (pivot < 0) return std::nullopt;
    int k = int(divisor.size()) - 1;
    if (!(divisor.back() == 1)) return std::nullopt; // monic only
    std::unordered_map<Monomial, std::vector<std::pair<long, Int>>, MonomialHash> classes;
    for (const auto& t : p.terms()) {
        long ep = t.first.e[pivot], wp = v.e[pivot];
        long q = ep / wp;
        if ((ep % wp != 0) && ((ep < 0) != (wp < 0))) --q;
        Monomial rep = t.first * v.pow(-q);
        classes[rep].push_back({q, t.second});
    }
    std::unordered_map<Monomial, Int, MonomialHash> acc;
    for (auto& [rep, entries] : classes) {
        long qlo = entries.front().first, qhi = entries.front().first;
        for (auto& e : entries) {
            qlo = std::min(qlo, e.first);
            qhi = std::max(qhi, e.first);
        }
        if (qhi - qlo < k) return std::nullopt;
        std::vector<Int> dense(size_t(qhi - qlo + 1), Int(0));
        for (auto& e : entries) dense[size_t(e.first - qlo)] += e.second;
        for (long top = qhi - qlo; top >= k; --top) {
            Int c = dense[size_t(top)];
            if (c == 0) continue;
            for (int j = 0; j <= k; ++j) dense[size_t(top - k + j)] -= c * divisor[size_t(j)];
            acc[rep * v.pow(qlo + top - k)] += c;
        }
        for (long j = 0; j < k; ++j)
            if (dense[size_t(j)] != 0) return std::nullopt;
    }
    std::vector<Poly::Term> ts;
    for (auto& [m, c] : acc)
        if (c != 0) ts.emplace_back(m, c);
    return Poly::from_terms(std::move(ts));
}

std::optional<Poly> divide_by_atom(const Poly& p, const Monomial& v, int d) {
    if (d == 1) return p.divide_by_binomial(Int(1), v);
    return divide_by_dense_in_v(p, v, cyclotomic_int(d));
}

using AtomCounts = std::map<Monomial, std::map<int, int>>;

// Greedy reassembly of an atom multiset into binomial factors.  On failure
// reports the atom (v, d) whose absence blocked the largest factor.
std::optional<std::map<Monomial, int>> reassemble(AtomCounts atoms, Monomial* missing_v,
                                                  int* missing_d) {
    std::map<Monomial, int> den;
    for (auto& [v, counts] : atoms) {
        while (true) {
            int dmax = 0;
            for (auto& [d, c] : counts)
                if (c > 0) dmax = std::max(dmax, d);
            if (dmax == 0) break;
            for (int dd = 1; dd <= dmax; ++dd) {
                if (dmax % dd != 0) continue;
                auto it = counts.find(dd);
                if (it == counts.end() || it->second <= 0) {
                    if (missing_v) *missing_v = v;
                    if (missing_d) *missing_d = dd;
                    return std::nullopt;
                }
                --it->second;
            }
            den[v.pow(dmax)] += 1;
        }
    }
    return den;
}

} // namespace

namespace {

int den_total_degree(const std::map<Monomial, int>& den) {
    int deg = 0;
    for (auto& [u, m] : den) {
        int d = 0;
        for (int i = 0; i < Monomial::kMaxVars; ++i) d += std::abs(int(u.e[i]));
        deg += d * m;
    }
    return deg;
}

} // namespace

std::pair<RatFn, Poly> ratfn_reduce_tracked(RatFn f) {
    Poly gcd(Int(1));
    int last_degree = den_total_degree(f.den) + 1;
    while (den_total_degree(f.den) < last_degree) {
        last_degree = den_total_degree(f.den);
        AtomCounts atoms;
        for (auto& [u, mult] : f.den) {
            int r = 0;
            for (int i = 0; i < Monomial::kMaxVars; ++i) r = std::gcd(r, std::abs(int(u.e[i])));
            Monomial v = u;
            for (int i = 0; i < Monomial::kMaxVars; ++i) v.e[i] = int16_t(v.e[i] / r);
            for (int d = 1; d <= r; ++d)
                if (r % d == 0) atoms[v][d] += mult;
        }
        // Cancel every atom that divides the numerator, to full multiplicity.
        AtomCounts cancelled;
        for (auto& [v, counts] : atoms)
            for (auto& [d, c] : counts) {
                while (c > 0) {
                    auto q = divide_by_atom(f.num, v, d);
                    if (!q) break;
                    f.num = std::move(*q);
                    --c;
                    cancelled[v][d] += 1;
                }
            }
        // Return atoms until the remainder reassembles into binomials: first
        // the missing atom itself, otherwise the largest cancelled atom in
        // that direction (which regroups the factors).
        Monomial mv;
        int md = 0;
        std::optional<std::map<Monomial, int>> den;
        while (!(den = reassemble(atoms, &mv, &md))) {
            auto itv = cancelled.find(mv);
            if (itv == cancelled.end())
                throw std::logic_error("denominator atoms failed to reassemble");
            int back = 0;
            if (itv->second.count(md) && itv->second[md] > 0) {
                back = md;
            } else {
                for (auto& [d, c] : itv->second)
                    if (c > 0) back = std::max(back, d);
                if (back == 0) throw std::logic_error("denominator atoms failed to reassemble");
            }
            itv->second[back] -= 1;
            atoms[mv][back] += 1;
            f.num *= atom_poly(mv, back);
        }
        f.den = std::move(*den);
        for (auto& [v, counts] : cancelled)
            for (auto& [d, c] : counts)
                for (int i = 0; i < c; ++i) gcd *= atom_poly(v, d);
    }
    return {std::move(f), std::move(gcd)};
}

RatFn ratfn_reduce(RatFn f) { return ratfn_reduce_tracked(std::move(f)).first; }

} // namespace tracealg
