#pragma once

#include <bitset>
#include <string>
#include <string_view>
#include <variant>

#include "treealg/alphabet.hpp"
#include "treealg/tree.hpp"

namespace treealg {

/// The grafting homomorphism that replaces every `source` leaf by `replacement`.
struct Grafting {
  Letter source;
  Tree replacement;
};

/// Monoid homomorphism mapping `source` to `replacement` (possibly empty).
struct WordSubstitution {
  Letter source;
  std::string replacement;
};

/// Erasing homomorphism on words: keeps the symbols in the kept set.
class Projection {
 public:
  explicit Projection(std::string_view kept);

  /// Keeps the shape symbols: maps a tree encoding to its skeleton.
  static Projection sigma();
  /// Keeps the alphabet letters: maps a tree encoding to its foliage.
  static Projection phi(const Alphabet& alphabet);

  bool keeps(char c) const noexcept { return kept_[static_cast<unsigned char>(c)]; }

 private:
  std::bitset<256> kept_;
};

Tree graft(const Grafting& g, const Tree& t);

/// Replaces every `source` leaf of `t` by `replacement`, sharing untouched
/// subtrees. Unlike `graft`, `source` need not be an alphabet letter, which
/// is how polynomials substitute their variable.
Tree replace_leaves(const Tree& t, Letter source, const Tree& replacement);

std::string substitute(const WordSubstitution& s, std::string_view w);

std::string project(const Projection& p, std::string_view w);

/// Letter criterion: the source letter does not occur in the foliage of the
/// replacement. Note Γ_{a→a} is the identity map, yet fails this criterion.
bool is_idempotent(const Grafting& g);

/// Whether foliage(graft(g, t)) equals the substitution of foliage(replacement)
/// for the source letter in foliage(t).
bool commute_check(const Grafting& g, const Tree& t);

/// Relabels every leaf with `c`, as the composition of the graftings
/// Γ_{d→c} for d in alphabet \ {c}, in alphabet order.
Tree recolor(const Tree& t, Letter c, const Alphabet& alphabet);

bool occurs(Letter c, const Tree& t);

/// A homomorphism whose kernel is a congruence: a grafting, or a word
/// projection applied to the tree encoding.
using Kernel = std::variant<Grafting, Projection>;

/// t ~ t2 in ker(h), i.e. h(t) = h(t2).
bool kernel_related(const Kernel& h, const Tree& t, const Tree& t2);

}  // namespace treealg
