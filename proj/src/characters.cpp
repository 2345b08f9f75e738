#include "tracealg/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tracealg {

std::vector<Partition> partitions_of(int k, int max_len) {
    std::vector<Partition> out;
    Partition cur;
    // parts chosen weakly decreasing, largest first
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (max_len >= 0 && int(cur.size()) == max_len) return;
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(uint8_t(p));
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

Int z_order(const Partition& rho) {
    Int z = 1;
    size_t i = 0;
    while (i < rho.size()) {
        size_t j = i;
        while (j < rho.size() && rho[j] == rho[i]) ++j;
        int m = int(j - i);
        for (int q = 0; q < m; ++q) z *= Int(rho[i]);
        z *= factorial(m);
        i = j;
    }
    return z;
}

Int class_size(const Partition& rho) { return factorial(weight(rho)) / z_order(rho); }

uint64_t pack_partition(const Partition& p) {
    if (p.size() > 12) throw std::invalid_argument("partition too long to pack");
    uint64_t v = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] >= 32) throw std::invalid_argument("part too large to pack");
        v |= uint64_t(p[i]) << (5 * i);
    }
    return v;
}

uint32_t CharCache::suffix_index(const Partition& rho, size_t depth) {
    Partition suf(rho.begin() + long(depth), rho.end());
    int w = weight(suf);
    if (int(index_.size()) <= w) index_.resize(size_t(w) + 1);
    auto& tab = index_[size_t(w)];
    // partitions of w indexed by packed value order of first use;
    // identity only matters within a weight class
    uint64_t key = 0;
    for (size_t i = 0; i < suf.size(); ++i) key = key * 27 + suf[i];
    auto it = tab.find(key);
    if (it != tab.end()) return it->second;
    uint32_t idx = uint32_t(tab.size());
    tab.emplace(key, idx);
    return idx;
}

int64_t CharCache::eval(const Partition& mu, const Partition& rho, size_t depth) {
    if (mu.empty()) return 1;
    Key k{pack_partition(mu), (uint32_t(weight(mu)) << 16) | suffix_index(rho, depth)};
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    int r = rho[depth];
    // beta numbers: beta_i = mu_i + (l - 1 - i), strictly decreasing
    int l = int(mu.size());
    int64_t total = 0;
    std::vector<int> beta(static_cast<size_t>(l), 0);
    for (int i = 0; i < l; ++i) beta[size_t(i)] = int(mu[size_t(i)]) + (l - 1 - i);
    for (int i = 0; i < l; ++i) {
        int nb = beta[size_t(i)] - r;
        if (nb < 0) continue;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < l; ++j) {
            if (j == i) continue;
            if (beta[size_t(j)] == nb) {
                clash = true;
                break;
            }
            if (beta[size_t(j)] < beta[size_t(i)] && beta[size_t(j)] > nb) ++height;
        }
        if (clash) continue;
        // rebuild the partition from the modified beta set
        std::vector<int> nbeta = beta;
        nbeta[size_t(i)] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        Partition nmu;
        int nl = int(nbeta.size());
        for (int j = 0; j < nl; ++j) {
            int part = nbeta[size_t(j)] - (nl - 1 - j);
            if (part < 0) throw std::logic_error("bad beta rebuild");
            if (part > 0) nmu.push_back(uint8_t(part));
        }
        int64_t sub = eval(nmu, rho, depth + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(k, total);
    return total;
}

int64_t CharCache::value(const Partition& mu, const Partition& rho) {
    if (weight(mu) != weight(rho)) throw std::invalid_argument("weight mismatch");
    return eval(mu, rho, 0);
}

int64_t CharCache::dimension(const Partition& mu) {
    Partition ones(size_t(weight(mu)), 1);
    return value(mu, ones);
}

Int kronecker_coeff(const Partition& lambda, const Partition& mu, const Partition& nu,
                    CharCache& cache) {
    int k = weight(lambda);
    if (weight(mu) != k || weight(nu) != k) throw std::invalid_argument("weight mismatch");
    Int total = 0;
    for (const Partition& rho : partitions_of(k)) {
        Int term = class_size(rho);
        term *= cache.value(lambda, rho);
        term *= cache.value(mu, rho);
        term *= cache.value(nu, rho);
        total += term;
    }
    Int kf = factorial(k);
    if (total % kf != 0) throw std::logic_error("non-integral Kronecker coefficient");
    return total / kf;
}

} // namespace tracealg
