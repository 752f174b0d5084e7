#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "treealg/alphabet.hpp"

namespace treealg {

/// Complete binary tree whose leaves carry letters.
///
/// Trees are immutable values with shared structure: copying is O(1) and
/// operations that rebuild a tree reuse every untouched subtree. Leaf count
/// and a structural hash are cached per node so equality and hashing are
/// cheap on the large universes the test suites walk.
class Tree {
 public:
  static Tree leaf(Letter letter);
  static Tree node(Tree left, Tree right);

  bool is_leaf() const noexcept;
  /// Precondition: is_leaf().
  Letter letter() const noexcept;
  /// Precondition: !is_leaf().
  const Tree& left() const noexcept;
  const Tree& right() const noexcept;

  std::uint32_t leaf_count() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Tree& a, const Tree& b) noexcept;

 private:
  struct Node;
  Tree() = default;
  explicit Tree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Leaves have null children.
struct Tree::Node {
  Letter letter = 0;
  Tree left;
  Tree right;
  std::uint32_t leaves = 1;
  std::size_t hash = 0;
};

inline bool Tree::is_leaf() const noexcept { return !node_->left.node_; }
inline Letter Tree::letter() const noexcept { return node_->letter; }
inline const Tree& Tree::left() const noexcept { return node_->left; }
inline const Tree& Tree::right() const noexcept { return node_->right; }
inline std::uint32_t Tree::leaf_count() const noexcept { return node_->leaves; }
inline std::size_t Tree::hash() const noexcept { return node_->hash; }

struct TreeHash {
  std::size_t operator()(const Tree& t) const noexcept { return t.hash(); }
};

/// The product t ⋆ t2: a fresh root with `t` on the left and `t2` on the right.
inline Tree star(Tree t, Tree t2) { return Tree::node(std::move(t), std::move(t2)); }

/// Shape of a tree as a word over '<' '*' '>'. Always a well-formed skeleton:
/// either empty or `<s*s'>` for skeletons s, s'.
struct Skeleton {
  std::string word;
  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

/// Left-to-right word of leaf letters; never empty.
struct Foliage {
  std::string word;
  friend bool operator==(const Foliage&, const Foliage&) = default;
};

/// ASCII word encoding: `a` for a leaf, `<l*r>` for a node.
std::string encode(const Tree& t);

/// Parses the ASCII tree grammar `tree ::= LETTER | '<' tree '*' tree '>'`.
/// Letters must belong to `alphabet`. Throws MalformedTree.
Tree parse_tree(std::string_view text, const Alphabet& alphabet);

/// Same grammar, additionally accepting the polynomial variable `x`.
Tree parse_term(std::string_view text, const Alphabet& alphabet);

/// Throws MalformedSkeleton unless `text` is a well-formed skeleton.
Skeleton parse_skeleton(std::string_view text);

Skeleton skeleton(const Tree& t);
Foliage foliage(const Tree& t);

/// The unique tree with the given foliage and skeleton.
/// Throws LengthMismatch when |s| != 3|u| - 3 and MalformedSkeleton when
/// `s` is not a skeleton.
Tree rebuild(const Foliage& u, const Skeleton& s);

/// Renders '<' '*' '>' as U+25C2, U+2022, U+25B8.
std::string to_unicode(std::string_view ascii);
/// Inverse of to_unicode; other bytes are passed through untouched.
std::string from_unicode(std::string_view text);

/// Strict weak order on skeleton words with '<' < '*' < '>'.
bool skeleton_less(std::string_view a, std::string_view b) noexcept;

}  // namespace treealg

template <>
struct std::hash<treealg::Tree> {
  std::size_t operator()(const treealg::Tree& t) const noexcept { return t.hash(); }
};
