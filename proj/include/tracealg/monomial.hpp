#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tracealg {

// Exponent vector over a fixed, per-computation variable list.  Slots past
// the active variable count stay zero, so equality and hashing never need a
// context.  Exponents may be negative (Laurent monomials).
struct Monomial {
    static constexpr int kMaxVars = 8;
    std::array<int16_t, kMaxVars> e{};

    bool is_one() const {
        for (int16_t v : e)
            if (v != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            int v = int(e[i]) + int(o.e[i]);
            if (v < INT16_MIN || v > INT16_MAX) throw std::overflow_error("monomial exponent overflow");
            r.e[i] = int16_t(v);
        }
        return r;
    }

    Monomial inverse() const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = int16_t(-e[i]);
        return r;
    }

    Monomial pow(long k) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            long v = long(e[i]) * k;
            if (v < INT16_MIN || v > INT16_MAX) throw std::overflow_error("monomial exponent overflow");
            r.e[i] = int16_t(v);
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    bool operator<(const Monomial& o) const { return e < o.e; }

    static Monomial var(int i, int exp = 1) {
        Monomial m;
        m.e[i] = int16_t(exp);
        return m;
    }
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < Monomial::kMaxVars; ++i) {
            h ^= uint64_t(uint16_t(m.e[i]));
            h *= 1099511628211ull;
        }
        return size_t(h);
    }
};

// Variable context: names, and how many leading variables are "series"
// variables (the ones with small modulus in the contour-integral picture;
// everything after them lives on the unit torus).  tie_index breaks size
// ties between series variables: the variable at tie_index is treated as
// infinitesimally smaller than the others.
struct VarCtx {
    std::vector<std::string> names;
    int small_count = 0;
    int tie_index = 0;

    int nvars() const { return int(names.size()); }

    static VarCtx bigraded(int torus_vars) {
        VarCtx c;
        c.names = {"s", "t"};
        for (int i = 1; i <= torus_vars; ++i) c.names.push_back("x" + std::to_string(i));
        c.small_count = 2;
        c.tie_index = 1;
        return c;
    }

    static VarCtx single(std::vector<std::string> extra = {}) {
        VarCtx c;
        c.names = {"t"};
        for (auto& n : extra) c.names.push_back(n);
        c.small_count = 1;
        c.tie_index = 0;
        return c;
    }

    int index_of(const std::string& n) const {
        for (int i = 0; i < nvars(); ++i)
            if (names[i] == n) return i;
        throw std::invalid_argument("unknown variable " + n);
    }
};

// Size classification of a monomial under |tie| << |others| << 1 for the
// series variables while torus variables sit on the unit circle.
struct SizeKey {
    int total_small;
    int tie_exp;
};

inline SizeKey size_key(const Monomial& m, const VarCtx& ctx) {
    int tot = 0;
    for (int i = 0; i < ctx.small_count; ++i) tot += m.e[i];
    return {tot, m.e[ctx.tie_index]};
}

// >0: |m| < 1 as the series variables shrink; <0: |m| > 1; 0: |m| == 1.
inline int size_sign(const Monomial& m, const VarCtx& ctx) {
    SizeKey k = size_key(m, ctx);
    if (k.total_small != 0) return k.total_small > 0 ? 1 : -1;
    if (k.tie_exp != 0) return k.tie_exp > 0 ? 1 : -1;
    return 0;
}

inline bool has_torus_part(const Monomial& m, const VarCtx& ctx) {
    for (int i = ctx.small_count; i < ctx.nvars(); ++i)
        if (m.e[i] != 0) return true;
    return false;
}

// Canonical orientation for a binomial factor 1-u: prefer the representative
// whose monomial shrinks (size_sign > 0); pure torus monomials fall back to
// lexicographic sign so that exactly one of u, 1/u is canonical.
inline bool is_canonical_orientation(const Monomial& m, const VarCtx& ctx) {
    int s = size_sign(m, ctx);
    if (s != 0) return s > 0;
    for (int i = 0; i < Monomial::kMaxVars; ++i) {
        if (m.e[i] > 0) return true;
        if (m.e[i] < 0) return false;
    }
    return true; // m == 1; callers must not store it
}

} // namespace tracealg
