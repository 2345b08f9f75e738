#pragma once

#include <optional>
#include <vector>

#include "tracealg/ints.hpp"

namespace tracealg {

// Arithmetic context for Q(zeta_M) = Q[x]/Phi_M(x).
class CycCtx {
  public:
    explicit CycCtx(int order);

    int order() const { return order_; }
    int deg() const { return deg_; }
    // Reduction of x^(deg+i), i in [0, deg-2], as coefficients 0..deg-1.
    const std::vector<Rat>& reduction(int i) const { return red_[size_t(i)]; }
    // Coordinates of zeta^k, k in [0, order).
    const std::vector<Rat>& zeta_pow(int k) const { return zeta_[size_t(k % order_)]; }

    static const CycCtx& get(int order);

  private:
    int order_;
    int deg_;
    std::vector<std::vector<Rat>> red_;
    std::vector<std::vector<Rat>> zeta_;
};

// Element of Q(zeta_M).  ctx == nullptr marks a plain rational scalar that
// lifts into any context on contact.
class Cyc {
  public:
    Cyc() : ctx_(nullptr), c_{Rat(0)} {}
    Cyc(int v) : ctx_(nullptr), c_{Rat(v)} {}
    Cyc(const Int& v) : ctx_(nullptr), c_{Rat(v)} {}
    Cyc(const Rat& v) : ctx_(nullptr), c_{v} {}
    Cyc(const CycCtx* ctx, std::vector<Rat> coords) : ctx_(ctx), c_(std::move(coords)) {}

    static Cyc zeta(const CycCtx& ctx, int k) {
        return Cyc(&ctx, ctx.zeta_pow(((k % ctx.order()) + ctx.order()) % ctx.order()));
    }

    const CycCtx* ctx() const { return ctx_; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const {
        for (auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    // True when the value lies in Q.
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Rat rational_value() const { return c_[0]; }

    Cyc operator-() const {
        Cyc r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const { return *this + (-o); }
    Cyc operator*(const Cyc& o) const;
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

    bool operator==(const Cyc& o) const { return (*this - o).is_zero(); }
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    // Full field inverse (solves the deg x deg linear system).
    Cyc inverse() const;

    Cyc pow(long e) const;

  private:
    const CycCtx* ctx_;
    std::vector<Rat> c_;

    static void align(Cyc& a, Cyc& b);
};

inline Cyc cyc_unit_pow(const Cyc& u, long k) { return u.pow(k); }

// Integer coefficients of the d-th cyclotomic polynomial, low degree first.
const std::vector<Int>& cyclotomic_int(int d);

} // namespace tracealg
