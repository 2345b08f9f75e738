#include "tracealg/matrixeval.hpp"

#include <stdexcept>

namespace tracealg {

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

Rat RatMatrix::trace() const {
    Rat t(0);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("not square");
    int n = rows_;
    RatMatrix a = *this;
    RatMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument("singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(a.at(piv, j), a.at(col, j));
            std::swap(inv.at(piv, j), inv.at(col, j));
        }
        Rat f = Rat(1) / a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) *= f;
            inv.at(col, j) *= f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0) continue;
            Rat g = a.at(r, col);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= g * a.at(col, j);
                inv.at(r, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

SamplePoint random_sample(int n, std::mt19937_64& rng, bool trace_zero) {
    std::uniform_int_distribution<int> d(-50, 50);
    SamplePoint s;
    s.n = n;
    s.trace_zero = trace_zero;
    s.X = RatMatrix(n, n);
    s.Y = RatMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            s.X.at(i, j) = Rat(d(rng));
            s.Y.at(i, j) = Rat(d(rng));
        }
    if (trace_zero) {
        Rat tx = s.X.trace() / n;
        Rat ty = s.Y.trace() / n;
        for (int i = 0; i < n; ++i) {
            s.X.at(i, i) -= tx;
            s.Y.at(i, i) -= ty;
        }
    }
    return s;
}

Rat eval_trace(const TraceWord& w, const SamplePoint& p) {
    RatMatrix m = RatMatrix::identity(p.n);
    for (char c : w.letters()) m = m * (c == 'x' ? p.X : p.Y);
    return m.trace();
}

Rat eval_trace(const TraceElement& e, const SamplePoint& p) {
    Rat t(0);
    for (auto& [c, w] : e.terms) t += Rat(c) * eval_trace(w, p);
    return t;
}

SamplePoint conjugated(const SamplePoint& p, const RatMatrix& g) {
    RatMatrix ginv = g.inverse();
    SamplePoint out = p;
    out.X = g * p.X * ginv;
    out.Y = g * p.Y * ginv;
    return out;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return uint64_t((unsigned __int128)(a) * b % p);
}

namespace {

uint64_t rat_mod(const Rat& r, uint64_t p) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    Int pm(p);
    Int n = num % pm;
    if (n < 0) n += pm;
    Int d = den % pm;
    if (d == 0) throw std::domain_error("denominator vanishes mod p");
    uint64_t dv = d.convert_to<uint64_t>();
    uint64_t inv = 1, base = dv, e = p - 2;
    while (e) {
        if (e & 1) inv = mulmod(inv, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return mulmod(n.convert_to<uint64_t>(), inv, p);
}

} // namespace

ModSample reduce_mod(const SamplePoint& s, uint64_t p) {
    ModSample m;
    m.n = s.n;
    m.p = p;
    m.X.resize(size_t(s.n) * s.n);
    m.Y.resize(size_t(s.n) * s.n);
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) {
            m.X[size_t(i * s.n + j)] = rat_mod(s.X.at(i, j), p);
            m.Y[size_t(i * s.n + j)] = rat_mod(s.Y.at(i, j), p);
        }
    return m;
}

uint64_t eval_trace_mod(const TraceWord& w, const ModSample& s) {
    int n = s.n;
    std::vector<uint64_t> acc, tmp(size_t(n) * n);
    const std::vector<uint64_t>* first = (w.letters()[0] == 'x') ? &s.X : &s.Y;
    acc = *first;
    for (size_t li = 1; li < w.letters().size(); ++li) {
        const std::vector<uint64_t>& m = (w.letters()[li] == 'x') ? s.X : s.Y;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                unsigned __int128 sum = 0;
                for (int k = 0; k < n; ++k)
                    sum += (unsigned __int128)acc[size_t(i * n + k)] * m[size_t(k * n + j)];
                tmp[size_t(i * n + j)] = uint64_t(sum % s.p);
            }
        acc.swap(tmp);
    }
    uint64_t t = 0;
    for (int i = 0; i < n; ++i) t = (t + acc[size_t(i * n + i)]) % s.p;
    return t;
}

uint64_t eval_trace_mod(const TraceElement& e, const ModSample& s) {
    uint64_t t = 0;
    for (auto& [c, w] : e.terms) {
        uint64_t v = eval_trace_mod(w, s);
        uint64_t cc = uint64_t(((long(c) % long(s.p)) + long(s.p)) % long(s.p));
        t = (t + mulmod(cc, v, s.p)) % s.p;
    }
    return t;
}

} // namespace tracealg
