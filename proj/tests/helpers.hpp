#pragma once

#include <random>
#include <string_view>

#include "treealg/alphabet.hpp"
#include "treealg/tree.hpp"

namespace testing {

inline const treealg::Alphabet& abc() {
  static const treealg::Alphabet sigma("abc");
  return sigma;
}

inline treealg::Tree T(std::string_view text) { return treealg::parse_tree(text, abc()); }

inline treealg::Tree random_tree(std::mt19937_64& rng, std::size_t leaves, std::string_view letters) {
  if (leaves == 1) return treealg::Tree::leaf(letters[rng() % letters.size()]);
  const std::size_t left = 1 + rng() % (leaves - 1);
  treealg::Tree l = random_tree(rng, left, letters);
  return treealg::star(std::move(l), random_tree(rng, leaves - left, letters));
}

}  // namespace testing
