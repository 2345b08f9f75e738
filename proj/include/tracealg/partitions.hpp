#pragma once

#include <cstdint>
#include <vector>

#include "tracealg/ints.hpp"

namespace tracealg {

// Weakly decreasing positive parts; the empty partition has weight 0.
using Partition = std::vector<uint8_t>;

inline int weight(const Partition& p) {
    int w = 0;
    for (auto x : p) w += x;
    return w;
}

// All partitions of k with at most max_len parts (max_len < 0: unrestricted),
// in lexicographically decreasing order of part lists.
std::vector<Partition> partitions_of(int k, int max_len = -1);

// Centralizer order z_rho = prod_i i^{m_i} m_i!.
Int z_order(const Partition& rho);

// k!/z_rho, the size of the conjugacy class.
Int class_size(const Partition& rho);

} // namespace tracealg
