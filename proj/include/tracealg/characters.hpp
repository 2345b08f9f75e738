#pragma once

#include <cstdint>
#include <unordered_map>

#include "tracealg/partitions.hpp"

namespace tracealg {

// Murnaghan-Nakayama evaluation of irreducible symmetric-group characters,
// with memoization shared across a computation.  Partitions passed as mu may
// have at most 12 parts; rho is an arbitrary cycle type of the same weight.
class CharCache {
  public:
    int64_t value(const Partition& mu, const Partition& rho);

    // chi^mu(1^k): the dimension of the irreducible.
    int64_t dimension(const Partition& mu);

    size_t size() const { return memo_.size(); }

  private:
    struct Key {
        uint64_t lam;
        uint32_t rest; // (weight << 16) | suffix index
        bool operator==(const Key& o) const { return lam == o.lam && rest == o.rest; }
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            uint64_t h = k.lam * 0x9e3779b97f4a7c15ull ^ (uint64_t(k.rest) << 1);
            h ^= h >> 29;
            h *= 0xbf58476d1ce4e5b9ull;
            h ^= h >> 32;
            return size_t(h);
        }
    };

    int64_t eval(const Partition& mu, const Partition& rho, size_t depth);
    uint32_t suffix_index(const Partition& rho, size_t depth);

    std::unordered_map<Key, int64_t, KeyHash> memo_;
    // partition -> index tables per weight, built lazily
    std::vector<std::unordered_map<uint64_t, uint32_t>> index_;
};

// Packs a partition with at most 12 parts, each < 32, into 60 bits.
uint64_t pack_partition(const Partition& p);

// Kronecker coefficient g(lambda, mu, nu) = <chi^lambda chi^mu, chi^nu>.
Int kronecker_coeff(const Partition& lambda, const Partition& mu, const Partition& nu,
                    CharCache& cache);

} // namespace tracealg
