#include "tracealg/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace tracealg {

namespace {

// Dense univariate polynomials over Q, low degree first.
using UPoly = std::vector<Rat>;

UPoly upoly_xn_minus_1(int n) {
    UPoly p(size_t(n) + 1, Rat(0));
    p[0] = -1;
    p[size_t(n)] = 1;
    return p;
}

void upoly_trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor.
UPoly upoly_div(UPoly num, const UPoly& div) {
    UPoly q(num.size() >= div.size() ? num.size() - div.size() + 1 : 0, Rat(0));
    for (size_t i = num.size(); i-- >= div.size() && i + 1 >= div.size();) {
        if (i + 1 < div.size()) break;
        Rat c = num[i];
        if (c == 0) continue;
        size_t shift = i - (div.size() - 1);
        q[shift] = c;
        for (size_t j = 0; j < div.size(); ++j) num[shift + j] -= c * div[j];
    }
    upoly_trim(num);
    if (!num.empty()) throw std::logic_error("inexact cyclotomic division");
    return q;
}

UPoly cyclotomic_poly(int n) {
    static std::map<int, UPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::function<UPoly(int)> phi = [&](int m) -> UPoly {
        auto c = cache.find(m);
        if (c != cache.end()) return c->second;
        UPoly p = upoly_xn_minus_1(m);
        for (int d = 1; d < m; ++d)
            if (m % d == 0) p = upoly_div(std::move(p), phi(d));
        cache[m] = p;
        return p;
    };
    return phi(n);
}

} // namespace

CycCtx::CycCtx(int order) : order_(order) {
    UPoly phi = cyclotomic_poly(order);
    deg_ = int(phi.size()) - 1;
    // x^deg = -(phi - x^deg); then x^(deg+i) by rolling.
    std::vector<Rat> cur(size_t(deg_), Rat(0));
    for (int i = 0; i < deg_; ++i) cur[size_t(i)] = -phi[size_t(i)];
    red_.push_back(cur);
    for (int i = 1; i <= deg_ - 2; ++i) {
        std::vector<Rat> nxt(size_t(deg_), Rat(0));
        Rat top = cur[size_t(deg_) - 1];
        for (int j = deg_ - 1; j > 0; --j) nxt[size_t(j)] = cur[size_t(j) - 1];
        if (top != 0)
            for (int j = 0; j < deg_; ++j) nxt[size_t(j)] += top * red_[0][size_t(j)];
        red_.push_back(nxt);
        cur = std::move(nxt);
    }
    // zeta^k coordinates
    std::vector<Rat> z(size_t(deg_), Rat(0));
    z[0] = 1;
    zeta_.push_back(z);
    for (int k = 1; k < order_; ++k) {
        std::vector<Rat> n(size_t(deg_), Rat(0));
        Rat top = z[size_t(deg_) - 1];
        for (int j = deg_ - 1; j > 0; --j) n[size_t(j)] = z[size_t(j) - 1];
        if (top != 0)
            for (int j = 0; j < deg_; ++j) n[size_t(j)] += top * red_[0][size_t(j)];
        zeta_.push_back(n);
        z = std::move(n);
    }
}

const CycCtx& CycCtx::get(int order) {
    static std::map<int, CycCtx> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, CycCtx(order)).first;
    return it->second;
}

void Cyc::align(Cyc& a, Cyc& b) {
    if (a.ctx_ == b.ctx_) return;
    auto lift = [](Cyc& x, const CycCtx* ctx) {
        Rat v = x.c_[0];
        x.ctx_ = ctx;
        x.c_.assign(size_t(ctx->deg()), Rat(0));
        x.c_[0] = v;
    };
    if (a.ctx_ == nullptr)
        lift(a, b.ctx_);
    else if (b.ctx_ == nullptr)
        lift(b, a.ctx_);
    else
        throw std::logic_error("mixing distinct cyclotomic orders");
}

Cyc Cyc::operator+(const Cyc& o) const {
    Cyc a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyc Cyc::operator*(const Cyc& o) const {
    Cyc a = *this, b = o;
    align(a, b);
    if (a.ctx_ == nullptr) return Cyc(a.c_[0] * b.c_[0]);
    const CycCtx& ctx = *a.ctx_;
    int d = ctx.deg();
    std::vector<Rat> conv(size_t(2 * d - 1), Rat(0));
    for (int i = 0; i < d; ++i) {
        if (a.c_[size_t(i)] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b.c_[size_t(j)] == 0) continue;
            conv[size_t(i + j)] += a.c_[size_t(i)] * b.c_[size_t(j)];
        }
    }
    std::vector<Rat> out(conv.begin(), conv.begin() + d);
    for (int k = d; k <= 2 * d - 2; ++k) {
        if (conv[size_t(k)] == 0) continue;
        const auto& row = ctx.reduction(k - d);
        for (int j = 0; j < d; ++j) out[size_t(j)] += conv[size_t(k)] * row[size_t(j)];
    }
    return Cyc(a.ctx_, std::move(out));
}

Cyc Cyc::inverse() const {
    if (ctx_ == nullptr) {
        if (c_[0] == 0) throw std::domain_error("division by zero");
        return Cyc(Rat(1) / c_[0]);
    }
    int d = ctx_->deg();
    // Columns: coords of (*this) * x^j.  Solve A y = e0.
    std::vector<std::vector<Rat>> A(size_t(d), std::vector<Rat>(size_t(d), Rat(0)));
    Cyc xj = *this;
    Cyc x = Cyc::zeta(*ctx_, 1);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) A[size_t(i)][size_t(j)] = xj.c_[size_t(i)];
        if (j + 1 < d) xj = xj * x;
    }
    std::vector<Rat> rhs(size_t(d), Rat(0));
    rhs[0] = 1;
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (int r = col; r < d; ++r)
            if (A[size_t(r)][size_t(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("division by zero in Q(zeta)");
        std::swap(A[size_t(piv)], A[size_t(col)]);
        std::swap(rhs[size_t(piv)], rhs[size_t(col)]);
        Rat inv = Rat(1) / A[size_t(col)][size_t(col)];
        for (int j = col; j < d; ++j) A[size_t(col)][size_t(j)] *= inv;
        rhs[size_t(col)] *= inv;
        for (int r = 0; r < d; ++r) {
            if (r == col) continue;
            Rat f = A[size_t(r)][size_t(col)];
            if (f == 0) continue;
            for (int j = col; j < d; ++j) A[size_t(r)][size_t(j)] -= f * A[size_t(col)][size_t(j)];
            rhs[size_t(r)] -= f * rhs[size_t(col)];
        }
    }
    return Cyc(ctx_, std::move(rhs));
}

const std::vector<Int>& cyclotomic_int(int d) {
    static std::map<int, std::vector<Int>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(d);
    if (it == cache.end()) {
        UPoly phi = cyclotomic_poly(d);
        std::vector<Int> v;
        for (auto& r : phi) {
            if (boost::multiprecision::denominator(r) != 1)
                throw std::logic_error("non-integral cyclotomic coefficient");
            v.push_back(Int(boost::multiprecision::numerator(r)));
        }
        it = cache.emplace(d, std::move(v)).first;
    }
    return it->second;
}

Cyc Cyc::pow(long e) const {
    Cyc base = e >= 0 ? *this : inverse();
    unsigned long k = (unsigned long)(e >= 0 ? e : -e);
    Cyc r(1);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

} // namespace tracealg
