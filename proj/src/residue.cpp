#include "tracealg/residue.hpp"

#include <optional>
#include <set>
#include <stdexcept>

namespace tracealg {

namespace {

struct Loc {
    int zp;
    Monomial m;
    bool operator<(const Loc& o) const { return zp != o.zp ? zp < o.zp : m < o.m; }
};

// Monomial with the integration variable removed.
Monomial strip_var(const Monomial& u, int var) {
    Monomial r = u;
    r.e[var] = 0;
    return r;
}

} // namespace

template <class Ring>
void ResidueEngine<Ring>::normalize(Term& t) const {
    FactorMap nd;
    P scale(ring_.one());
    bool scaled = false;
    for (auto& [f, m] : t.den) {
        if (m == 0) continue;
        if (f.u.is_one()) {
            if (f.zp % ring_.zorder == 0) throw std::domain_error("vanishing denominator factor");
            if constexpr (std::is_same_v<K, Int>) {
                throw std::logic_error("constant factor in integer engine");
            } else {
                K c = ring_.one() - zeta_pow(f.zp);
                K inv = c.inverse();
                for (int i = 0; i < m; ++i) t.num = t.num.scaled(inv);
            }
            continue;
        }
        if (is_canonical_orientation(f.u, ctx_)) {
            nd[f] += m;
            continue;
        }
        // 1/(1-gu)^m = (-g^{-1} u^{-1})^m / (1 - g^{-1} u^{-1})^m
        Factor nf{f.u.inverse(), int(((-f.zp) % ring_.zorder + ring_.zorder) % ring_.zorder)};
        nd[nf] += m;
        K cm = zeta_pow(-long(f.zp) * m);
        if (m % 2 == 1) cm = -cm;
        scale = scale.scaled(cm, f.u.inverse().pow(m));
        scaled = true;
    }
    if (scaled) t.num = t.num * scale;
    t.den = std::move(nd);
}

template <class Ring>
void ResidueEngine<Ring>::reduce(Term& t) const {
    bool changed = true;
    while (changed && !t.num.is_zero()) {
        changed = false;
        for (auto it = t.den.begin(); it != t.den.end(); ++it) {
            K unit = zeta_pow(it->first.zp);
            auto q = t.num.divide_by_binomial(unit, it->first.u);
            if (q) {
                t.num = std::move(*q);
                if (--it->second == 0) t.den.erase(it);
                changed = true;
                break;
            }
        }
    }
    if (t.num.is_zero()) t.den.clear();
}

template <class Ring>
typename ResidueEngine<Ring>::HSeries ResidueEngine<Ring>::hs_mul(const HSeries& a, const HSeries& b,
                                                                  int ord) const {
    HSeries r;
    r.nums.assign(size_t(ord), P{});
    for (int i = 0; i < int(a.nums.size()) && i < ord; ++i) {
        if (a.nums[size_t(i)].is_zero()) continue;
        for (int j = 0; j + i < ord && j < int(b.nums.size()); ++j) {
            if (b.nums[size_t(j)].is_zero()) continue;
            r.nums[size_t(i + j)] += a.nums[size_t(i)] * b.nums[size_t(j)];
        }
    }
    r.den = a.den;
    for (auto& [f, m] : b.den) r.den[f] += m;
    return r;
}

template <class Ring>
typename ResidueEngine<Ring>::HSeries ResidueEngine<Ring>::hs_inverse(const std::vector<P>& c,
                                                                      int ord) const {
    const P& c0 = c[0];
    HSeries out;
    out.nums.assign(size_t(ord), P{});
    if (c0.size() == 1) {
        // c0 = unit * monomial (or a nonzero constant in the field case):
        // plain series inversion, no denominator bookkeeping.
        const auto& [m0, k0] = c0.terms()[0];
        K inv0;
        if constexpr (std::is_same_v<K, Int>) {
            if (k0 != 1 && k0 != -1) throw std::logic_error("non-unit leading coefficient");
            inv0 = k0;
        } else {
            inv0 = k0.inverse();
        }
        Monomial minv = m0.inverse();
        std::vector<P> b;
        b.assign(size_t(ord), P{});
        b[0] = P(inv0, minv);
        for (int k = 1; k < ord; ++k) {
            P acc;
            for (int j = 0; j < k; ++j) {
                if (j < int(b.size()) && k - j < int(c.size()) && !c[size_t(k - j)].is_zero())
                    acc += c[size_t(k - j)] * b[size_t(j)];
            }
            b[size_t(k)] = acc.negated().scaled(inv0, minv);
        }
        out.nums = std::move(b);
        return out;
    }
    // c0 = 1 - zeta^zp w: park powers of c0 in the shared denominator.
    if (c0.size() != 2) throw std::logic_error("unexpected leading series coefficient");
    Monomial w;
    int zp = -1;
    {
        // identify c0 == 1 - zeta^zp * w
        const auto& ts = c0.terms();
        int one_idx = ts[0].first.is_one() ? 0 : (ts[1].first.is_one() ? 1 : -1);
        if (one_idx < 0 || !(ts[size_t(one_idx)].second == ring_.one()))
            throw std::logic_error("leading coefficient is not binomial");
        const auto& other = ts[size_t(1 - one_idx)];
        w = other.first;
        K neg = -other.second;
        for (int k = 0; k < ring_.zorder; ++k)
            if (neg == zeta_pow(k)) {
                zp = k;
                break;
            }
        if (zp < 0) throw std::logic_error("leading binomial has non-unit coefficient");
    }
    std::vector<P> d;
    d.assign(size_t(ord), P{});
    d[0] = P(ring_.one());
    for (int k = 1; k < ord; ++k) {
        P acc;
        for (int j = 0; j < k; ++j) {
            if (k - j >= int(c.size()) || c[size_t(k - j)].is_zero() || d[size_t(j)].is_zero())
                continue;
            P term = c[size_t(k - j)] * d[size_t(j)];
            // times c0^{k-j-1}
            for (int i = 0; i < k - j - 1; ++i) term = term * c0;
            acc += term;
        }
        d[size_t(k)] = acc.negated();
    }
    for (int k = 0; k < ord; ++k) {
        P v = d[size_t(k)];
        for (int i = 0; i < ord - 1 - k; ++i) v = v * c0;
        out.nums[size_t(k)] = std::move(v);
    }
    out.den[Factor{w, zp}] = ord;
    return out;
}

template <class Ring>
typename ResidueEngine<Ring>::Term ResidueEngine<Ring>::residue_at_zero(const Term& t,
                                                                        int var) const {
    Term out;
    std::vector<std::tuple<Factor, int, int>> active; // factor, mult, e
    int start_sum = 0;
    for (auto& [f, m] : t.den) {
        int e = f.u.e[var];
        if (e == 0) {
            out.den[f] += m;
            continue;
        }
        active.emplace_back(f, m, e);
        if (e < 0) start_sum += (-e) * m;
    }
    int val = t.num.min_exp(var);
    if (val + start_sum > 0) return out; // expansion starts above x^0: no contribution
    int cap = -val; // maximal useful series exponent before multiplying by num
    P acc(ring_.one());
    for (auto& [f, m, e] : active) {
        Monomial u0 = strip_var(f.u, var);
        K g = zeta_pow(f.zp);
        P series;
        if (e > 0) {
            for (int i = 0; i * e <= cap; ++i) {
                K c = K(binomial(i + m - 1, m - 1)) * Ring::unit_pow(g, i);
                Monomial mm = u0.pow(i);
                mm.e[var] = int16_t(i * e);
                series.add_term(mm, c);
            }
        } else {
            int k = -e;
            // (1-g u0 x^-k)^{-m} = (-1)^m g^-m u0^-m x^{km} sum_i C(i+m-1,m-1) g^-i u0^-i x^{ki}
            for (int i = 0; k * (m + i) <= cap; ++i) {
                K c = K(binomial(i + m - 1, m - 1)) * Ring::unit_pow(g, -m - i);
                if (m % 2 == 1) c = -c;
                Monomial mm = u0.pow(-m - i);
                mm.e[var] = int16_t(k * (m + i));
                series.add_term(mm, c);
            }
        }
        if (series.is_zero()) return Term{P{}, {}};
        // truncated product: drop exponents beyond cap
        std::vector<typename P::Term> keep;
        P prod = acc * series;
        for (auto& tm : prod.terms())
            if (tm.first.e[var] <= cap) keep.push_back(tm);
        acc = P::from_terms(std::move(keep));
        if (acc.is_zero()) return Term{P{}, {}};
    }
    P full = acc * t.num;
    std::vector<typename P::Term> slice;
    for (auto& tm : full.terms())
        if (tm.first.e[var] == 0) slice.push_back(tm);
    out.num = P::from_terms(std::move(slice));
    return out;
}

template <class Ring>
std::vector<typename ResidueEngine<Ring>::Term> ResidueEngine<Ring>::residues_at_poles(
    const Term& t, int var) const {
    std::vector<std::tuple<Factor, int, int>> active;
    FactorMap passive;
    for (auto& [f, m] : t.den) {
        int e = f.u.e[var];
        if (e == 0)
            passive[f] += m;
        else
            active.emplace_back(f, m, e);
    }

    // Enumerate candidate inner pole locations.
    std::set<Loc> locs;
    for (auto& [f, m, e] : active) {
        Monomial u0 = strip_var(f.u, var);
        int k = std::abs(e);
        int base_zp = e < 0 ? f.zp : -f.zp;
        Monomial base = e < 0 ? u0 : u0.inverse();
        int s = size_sign(base, ctx_);
        if (s == 0) throw std::domain_error("pole on the unit circle");
        if (s < 0) continue; // outer
        if (k == 1) {
            locs.insert(Loc{int(((base_zp % ring_.zorder) + ring_.zorder) % ring_.zorder), base});
            continue;
        }
        if (ring_.zorder % k != 0) throw std::domain_error("root order not supported by engine");
        if (((base_zp % k) + k) % k != 0) throw std::domain_error("nested root of unity");
        Monomial root = base;
        for (int i = 0; i < Monomial::kMaxVars; ++i) {
            if (root.e[i] % k != 0) throw std::domain_error("fractional pole exponent");
            root.e[i] = int16_t(root.e[i] / k);
        }
        for (int j = 0; j < k; ++j) {
            int zp = base_zp / k + j * (ring_.zorder / k);
            locs.insert(Loc{int(((zp % ring_.zorder) + ring_.zorder) % ring_.zorder), root});
        }
    }

    std::vector<Term> results;
    for (const Loc& L : locs) {
        // Total vanishing multiplicity and split of factors at this location.
        int m_total = 0;
        std::vector<std::tuple<Factor, int, int, bool>> facs; // factor, mult, e, vanishes
        for (auto& [f, m, e] : active) {
            Monomial u0 = strip_var(f.u, var);
            Monomial w = u0 * L.m.pow(e);
            int zz = ((f.zp + L.zp * e) % ring_.zorder + ring_.zorder) % ring_.zorder;
            bool vanish = w.is_one() && zz == 0;
            if (vanish) m_total += m;
            facs.emplace_back(f, m, e, vanish);
        }
        if (m_total == 0) continue;
        int ord = m_total;

        // Assemble the h-series of num(p+h) * (p+h)^{-1} * prod factors^{-mult},
        // with vanishing factors contributing W(h)^{-mult} = (V(h)/h)^{-mult}.
        HSeries prod = hs_one(ord);

        // num(p+h)
        {
            HSeries ns;
            ns.nums.assign(size_t(ord), P{});
            for (auto& [mm, cc] : t.num.terms()) {
                int d = mm.e[var];
                Monomial rest = strip_var(mm, var);
                for (int i = 0; i < ord; ++i) {
                    Int bc = binomial(d, i);
                    if (bc == 0) continue;
                    K coef = cc * K(bc) * Ring::unit_pow(zeta_pow(L.zp), d - i);
                    ns.nums[size_t(i)].add_term(rest * L.m.pow(d - i), coef);
                }
            }
            prod = hs_mul(prod, ns, ord);
        }
        // (p+h)^{-1}
        {
            HSeries ps;
            ps.nums.assign(size_t(ord), P{});
            for (int i = 0; i < ord; ++i) {
                K coef = Ring::unit_pow(zeta_pow(L.zp), -1 - i);
                if (i % 2 == 1) coef = -coef;
                ps.nums[size_t(i)] = P(coef, L.m.pow(-1 - i));
            }
            prod = hs_mul(prod, ps, ord);
        }
        for (auto& [f, m, e, vanish] : facs) {
            Monomial u0 = strip_var(f.u, var);
            std::vector<P> coeffs;
            coeffs.assign(size_t(ord + 1), P{});
            // V(h) = 1 - zeta^{f.zp} u0 (p+h)^e; V_i = -zeta^{f.zp} C(e,i) u0 p^{e-i}
            for (int i = 0; i <= ord; ++i) {
                Int bc = binomial(e, i);
                if (bc == 0) continue;
                K coef = -K(bc) * Ring::unit_pow(zeta_pow(f.zp + L.zp * (long(e) - i)), 1);
                coeffs[size_t(i)].add_term(u0 * L.m.pow(e - i), coef);
            }
            coeffs[0] += P(ring_.one());
            HSeries inv;
            if (vanish) {
                // V0 == 0; invert W(h) = V(h)/h.
                std::vector<P> w(coeffs.begin() + 1, coeffs.end());
                if (w[0].is_zero()) throw std::logic_error("degenerate vanishing factor");
                inv = hs_inverse(w, ord);
            } else {
                coeffs.resize(size_t(ord));
                if (coeffs[0].is_zero()) throw std::logic_error("misclassified vanishing factor");
                inv = hs_inverse(coeffs, ord);
            }
            for (int rep = 0; rep < m; ++rep) prod = hs_mul(prod, inv, ord);
        }

        Term res;
        res.num = prod.nums[size_t(ord - 1)];
        res.den = prod.den;
        for (auto& [f, m] : passive) res.den[f] += m;
        if (!res.num.is_zero()) {
            normalize(res);
            reduce(res);
            if (!res.num.is_zero()) results.push_back(std::move(res));
        }
    }
    return results;
}

template <class Ring>
std::vector<typename ResidueEngine<Ring>::Term> ResidueEngine<Ring>::integrate(
    std::vector<Term> terms, int var) const {
    // Normalize and cancel first: unit-circle pole candidates must cancel
    // against numerators before classification.
    std::vector<Term> clean;
    std::vector<Term> stuck;
    auto has_circle_pole = [&](const Term& t) {
        for (auto& [f, m] : t.den) {
            int e = f.u.e[var];
            if (e == 0) continue;
            Monomial base = strip_var(f.u, var);
            if (size_sign(base, ctx_) == 0) return true;
        }
        return false;
    };
    for (auto& t : terms) {
        Term c = t;
        normalize(c);
        reduce(c);
        if (c.num.is_zero()) continue;
        (has_circle_pole(c) ? stuck : clean).push_back(std::move(c));
    }
    if (!stuck.empty()) {
        Term merged = combine(stuck);
        normalize(merged);
        reduce(merged);
        if (!merged.num.is_zero()) {
            if (has_circle_pole(merged)) throw std::domain_error("pole on the unit circle");
            clean.push_back(std::move(merged));
        }
    }

    std::vector<Term> out;
    for (auto& t : clean) {
        Term z = residue_at_zero(t, var);
        if (!z.num.is_zero()) {
            normalize(z);
            reduce(z);
            if (!z.num.is_zero()) out.push_back(std::move(z));
        }
        auto rs = residues_at_poles(t, var);
        for (auto& r : rs) out.push_back(std::move(r));
    }
    return merge_equal_dens(std::move(out));
}

template <class Ring>
typename ResidueEngine<Ring>::Term ResidueEngine<Ring>::combine(const std::vector<Term>& terms) const {
    Term out;
    if (terms.empty()) return out;
    for (auto& t : terms)
        for (auto& [f, m] : t.den) {
            auto it = out.den.find(f);
            if (it == out.den.end())
                out.den[f] = m;
            else
                it->second = std::max(it->second, m);
        }
    for (auto& t : terms) {
        P scaled = t.num;
        for (auto& [f, m] : out.den) {
            int have = 0;
            auto it = t.den.find(f);
            if (it != t.den.end()) have = it->second;
            for (int i = have; i < m; ++i) {
                P fp(ring_.one());
                fp.add_term(f.u, -zeta_pow(f.zp));
                scaled = scaled * fp;
            }
        }
        out.num += scaled;
    }
    return out;
}

template <class Ring>
std::vector<typename ResidueEngine<Ring>::Term> ResidueEngine<Ring>::merge_equal_dens(
    std::vector<Term> terms) const {
    std::map<FactorMap, P> acc;
    for (auto& t : terms) acc[t.den] += t.num;
    std::vector<Term> out;
    for (auto& [den, num] : acc)
        if (!num.is_zero()) out.push_back(Term{std::move(num), den});
    return out;
}

template class ResidueEngine<IntRing>;
template class ResidueEngine<CycRing>;

TruncSeries ct_series_oracle(const Poly& numerator,
                             const std::vector<std::pair<Monomial, int>>& den, const VarCtx& ctx,
                             const std::vector<int>& integration_vars, int D) {
    auto truncate = [&](Poly p) {
        std::vector<Poly::Term> keep;
        for (auto& [m, c] : p.terms()) {
            int tot = 0;
            for (int i = 0; i < ctx.small_count; ++i) tot += m.e[i];
            if (tot <= D) keep.emplace_back(m, c);
        }
        return Poly::from_terms(std::move(keep));
    };
    Poly acc = truncate(numerator);
    std::vector<std::pair<Monomial, int>> pending = den;
    auto expand_factor = [&](const Monomial& u, int mult) {
        int deg = 0;
        for (int i = 0; i < ctx.small_count; ++i) deg += u.e[i];
        if (deg <= 0) throw std::domain_error("oracle factor without positive series degree");
        Poly g;
        for (int j = 0; j * deg <= D; ++j) g.add_term(u.pow(j), binomial(j + mult - 1, mult - 1));
        return g;
    };
    for (int v : integration_vars) {
        for (auto it = pending.begin(); it != pending.end();) {
            if (it->first.e[v] != 0) {
                acc = truncate(acc * expand_factor(it->first, it->second));
                it = pending.erase(it);
            } else {
                ++it;
            }
        }
        std::vector<Poly::Term> keep;
        for (auto& [m, c] : acc.terms())
            if (m.e[v] == 0) keep.emplace_back(m, c);
        acc = Poly::from_terms(std::move(keep));
    }
    for (auto& [u, mult] : pending) acc = truncate(acc * expand_factor(u, mult));
    TruncSeries out(ctx.small_count, D);
    for (auto& [m, c] : acc.terms()) {
        for (int i = ctx.small_count; i < Monomial::kMaxVars; ++i)
            if (m.e[i] != 0) throw std::logic_error("torus variable left after projection");
        out.add({m.e[0], ctx.small_count > 1 ? m.e[1] : 0}, c);
    }
    return out;
}

} // namespace tracealg
