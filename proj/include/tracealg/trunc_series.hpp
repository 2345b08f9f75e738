#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "tracealg/ints.hpp"

namespace tracealg {

// Taylor coefficients of a (bi)graded series up to a total-degree bound.
// Coefficients beyond the bound are undefined, never assumed zero.
class TruncSeries {
  public:
    using Key = std::array<int, 2>; // exponent of (s,t) or (t,0)

    TruncSeries() = default;
    TruncSeries(int nvars, int max_total) : nvars_(nvars), max_total_(max_total) {}

    int nvars() const { return nvars_; }
    int max_total_degree() const { return max_total_; }
    const std::map<Key, Int>& coeffs() const { return coeffs_; }

    static int total(const Key& k) { return k[0] + k[1]; }

    void set(Key k, Int v) {
        if (total(k) > max_total_) return;
        if (v == 0)
            coeffs_.erase(k);
        else
            coeffs_[k] = std::move(v);
    }

    void add(Key k, const Int& v) {
        if (total(k) > max_total_ || v == 0) return;
        auto& slot = coeffs_[k];
        slot += v;
        if (slot == 0) coeffs_.erase(k);
    }

    Int coeff(Key k) const {
        if (total(k) > max_total_) throw std::out_of_range("coefficient beyond truncation bound");
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    Int coeff1(int d) const { return coeff({d, 0}); }

    static TruncSeries one(int nvars, int max_total) {
        TruncSeries s(nvars, max_total);
        s.set({0, 0}, 1);
        return s;
    }

    TruncSeries operator+(const TruncSeries& o) const {
        TruncSeries r(nvars_, std::min(max_total_, o.max_total_));
        for (auto& [k, v] : coeffs_)
            if (total(k) <= r.max_total_) r.add(k, v);
        for (auto& [k, v] : o.coeffs_)
            if (total(k) <= r.max_total_) r.add(k, v);
        return r;
    }

    // Truncated Cauchy product.
    TruncSeries operator*(const TruncSeries& o) const {
        TruncSeries r(nvars_, std::min(max_total_, o.max_total_));
        for (auto& [ka, va] : coeffs_) {
            if (total(ka) > r.max_total_) continue;
            for (auto& [kb, vb] : o.coeffs_) {
                Key k{ka[0] + kb[0], ka[1] + kb[1]};
                if (total(k) > r.max_total_) continue;
                r.add(k, va * vb);
            }
        }
        return r;
    }

    // Equality on the common truncation window.
    bool agrees_with(const TruncSeries& o, int up_to) const {
        if (up_to > max_total_ || up_to > o.max_total_)
            throw std::out_of_range("comparison beyond truncation bound");
        for (auto& [k, v] : coeffs_)
            if (total(k) <= up_to && o.coeff(k) != v) return false;
        for (auto& [k, v] : o.coeffs_)
            if (total(k) <= up_to && coeff(k) != v) return false;
        return true;
    }

    // Single-graded restriction s=t of a bigraded series.
    TruncSeries diagonal_sum() const {
        TruncSeries r(1, max_total_);
        for (auto& [k, v] : coeffs_) r.add({k[0] + k[1], 0}, v);
        return r;
    }

    std::vector<Int> coeff_list() const {
        if (nvars_ != 1) throw std::logic_error("coeff_list needs a single-graded series");
        std::vector<Int> out(size_t(max_total_) + 1, Int(0));
        for (auto& [k, v] : coeffs_) out[size_t(k[0])] = v;
        return out;
    }

  private:
    int nvars_ = 1;
    int max_total_ = 0;
    std::map<Key, Int> coeffs_;
};

} // namespace tracealg
