#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "treealg/alphabet.hpp"
#include "treealg/tree.hpp"

namespace treealg {

inline constexpr std::size_t kDefaultUniverseCap = 200'000;

/// Number of trees with exactly `leaves` leaves over `letters` letters:
/// Catalan(leaves - 1) * letters^leaves. Saturates at UINT64_MAX.
std::uint64_t tree_count(std::size_t letters, std::size_t leaves);

/// Number of trees with at most `max_leaves` leaves. Saturates.
std::uint64_t universe_size(std::size_t letters, std::size_t max_leaves);

/// All skeletons with exactly `leaves` leaves, sorted with '<' < '*' < '>'.
std::vector<Skeleton> skeletons_with_leaves(std::size_t leaves);

/// Visits every tree with at most `max_leaves` leaves in enumeration order:
/// by leaf count, then skeleton ('<' < '*' < '>'), then foliage in alphabet
/// order. Nothing is materialized beyond the tree being visited, so this
/// walks universes far above the enumeration cap.
void for_each_tree(const Alphabet& alphabet, std::size_t max_leaves,
                   const std::function<void(const Tree&)>& visit);

/// Same as for_each_tree restricted to trees with exactly `leaves` leaves.
void for_each_tree_with_leaves(const Alphabet& alphabet, std::size_t leaves,
                               const std::function<void(const Tree&)>& visit);

/// Visits the trees with exactly `leaves` leaves labeled from `letters`
/// (taken in the given order), e.g. polynomial terms over the alphabet
/// plus `x`.
void for_each_labeled_tree(std::string_view letters, std::size_t leaves,
                           const std::function<void(const Tree&)>& visit);

/// The universe U_max_leaves as a list in enumeration order.
/// Throws UniverseTooLarge when its size exceeds `cap`.
std::vector<Tree> enumerate_universe(const Alphabet& alphabet, std::size_t max_leaves,
                                     std::size_t cap = kDefaultUniverseCap);

/// Enumeration-order comparison of two trees.
bool enumeration_less(const Alphabet& alphabet, const Tree& a, const Tree& b);

}  // namespace treealg
