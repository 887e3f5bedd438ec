// Shared test utilities: definition-level oracles and seeded random data.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "synsem/dfa.hpp"
#include "synsem/transformation.hpp"

namespace synsem::testing {

// Oracle straight from the definition: t acts as a permutation on some
// subset X of size >= 2 exactly when the image of X is X itself.
inline bool is_permutational_by_definition(const Transformation& t) {
  const int n = t.degree();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    unsigned image = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) image |= 1u << (t.targets()[i] - 1);
    }
    if (image == mask) return true;
  }
  return false;
}

inline Transformation random_transformation(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> pick(1, n);
  std::vector<int> tgt(static_cast<std::size_t>(n));
  for (int& v : tgt) v = pick(rng);
  return Transformation(std::move(tgt));
}

inline Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

inline Dfa random_dfa(std::mt19937& rng, int n, int letters) {
  std::uniform_int_distribution<int> state(1, n);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<std::string> alphabet;
  for (int a = 0; a < letters; ++a) alphabet.push_back("a" + std::to_string(a + 1));
  std::vector<std::vector<int>> delta(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(letters)));
  for (auto& row : delta) {
    for (int& q : row) q = state(rng);
  }
  std::vector<int> finals;
  for (int q = 1; q <= n; ++q) {
    if (coin(rng)) finals.push_back(q);
  }
  return Dfa(n, std::move(alphabet), std::move(delta), state(rng), std::move(finals));
}

// All n^n transformations of a small degree, lexicographic.
inline std::vector<Transformation> all_transformations(int n) {
  std::vector<Transformation> out;
  const auto total = static_cast<std::uint32_t>(ipow(n, static_cast<unsigned>(n)));
  out.reserve(total);
  for (std::uint32_t code = 0; code < total; ++code) out.push_back(decode(n, code));
  return out;
}

}  // namespace synsem::testing
