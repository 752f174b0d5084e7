#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treealg/alphabet.hpp"
#include "treealg/tree.hpp"
#include "treealg/universe.hpp"

namespace treealg {

inline constexpr std::size_t kDefaultClosureBound = 6;

/// U_N materialized with an index, plus the product map from each node to
/// the indices of its two children.
class Universe {
 public:
  static constexpr std::uint32_t kNoChild = UINT32_MAX;

  Universe(Alphabet alphabet, std::size_t max_leaves, std::size_t cap = kDefaultUniverseCap);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t max_leaves() const noexcept { return max_leaves_; }
  std::size_t size() const noexcept { return trees_.size(); }
  const std::vector<Tree>& trees() const noexcept { return trees_; }
  const Tree& operator[](std::size_t i) const { return trees_[i]; }

  std::optional<std::size_t> index_of(const Tree& t) const;
  /// Throws PairOutOfUniverse when `t` is not in the universe.
  std::size_t require_index(const Tree& t) const;

  /// Child indices of node i; {kNoChild, kNoChild} for leaves.
  std::pair<std::uint32_t, std::uint32_t> children(std::size_t i) const { return children_[i]; }

 private:
  Alphabet alphabet_;
  std::size_t max_leaves_;
  std::vector<Tree> trees_;
  std::unordered_map<Tree, std::uint32_t, TreeHash> index_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> children_;
};

using PairSet = std::vector<std::pair<Tree, Tree>>;

/// An equivalence on a finite universe. Each tree maps to the smallest
/// enumeration index of its class.
class TreePartition {
 public:
  TreePartition(std::shared_ptr<const Universe> universe, std::vector<std::uint32_t> representative);

  const Universe& universe() const noexcept { return *universe_; }
  std::shared_ptr<const Universe> universe_ptr() const noexcept { return universe_; }

  std::uint32_t representative(std::size_t i) const { return representative_[i]; }
  const std::vector<std::uint32_t>& representatives() const noexcept { return representative_; }

  /// Throws PairOutOfUniverse when either tree is outside the universe.
  bool related(const Tree& t, const Tree& t2) const;

  /// Classes as index lists, each in enumeration order, ordered by their
  /// smallest member.
  std::vector<std::vector<std::size_t>> classes() const;
  std::size_t class_count() const;

  friend bool operator==(const TreePartition& a, const TreePartition& b) {
    return a.representative_ == b.representative_;
  }

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<std::uint32_t> representative_;
};

/// Least equivalence on the universe containing `pairs` and closed under
/// t1~t1', t2~t2' => t1*t2 ~ t1'*t2' whenever both products lie in the
/// universe. An under-approximation of the congruence generated by `pairs`:
/// a pair left apart is unknown, not unrelated.
/// Throws PairOutOfUniverse when a generator lies outside the universe.
TreePartition bounded_closure(const PairSet& pairs, std::shared_ptr<const Universe> universe);

TreePartition bounded_closure(const PairSet& pairs, const Alphabet& alphabet, std::size_t max_leaves,
                              std::size_t cap = kDefaultUniverseCap);

enum class PrincipalVerdict { Related, UnknownAtBound };

/// Whether (u, v) lies in the bounded closure of the single pair (t, t2).
PrincipalVerdict principal_related(const Tree& t, const Tree& t2, const Tree& u, const Tree& v,
                                   const Alphabet& alphabet, std::size_t max_leaves,
                                   std::size_t cap = kDefaultUniverseCap);

}  // namespace treealg
