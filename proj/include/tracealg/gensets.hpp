#pragma once

#include "tracealg/rank.hpp"

namespace tracealg {

// Named generator sets loaded from the data directory:
//   ter1  - the 17 parameter-system traces for n=4
//   gen1  - the full 32-element minimal generating set for n=4
//   gen1_alt - gen1 with the four replacement words
//   p171  - the 171-element minimal generating set for the traceless n=5
//           algebra (5 symmetric + 4 skew + 81 paired with their swaps)
GeneratorSet load_generator_set(const std::string& name);

// The 20-word test list for unitary similarity of 4x4 complex matrices.
std::vector<TraceWord> unitary_test_words();

} // namespace tracealg
