#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "treealg/alphabet.hpp"

namespace treealg {

/// A word over the alphabet extended with the variable `x`.
struct WordPolynomial {
  std::string term;
  friend bool operator==(const WordPolynomial&, const WordPolynomial&) = default;
};

/// Throws MalformedTree when `text` holds a symbol outside the alphabet and `x`.
WordPolynomial parse_word_polynomial(std::string_view text, const Alphabet& alphabet);

/// P(w): substitute `w` for every `x`.
std::string eval_word_poly(const WordPolynomial& p, std::string_view w);

/// Nonempty image words, one per letter, in alphabet order.
class WordGeneratorTable {
 public:
  /// Throws EmptyImage on an empty image and MalformedTree on foreign letters.
  WordGeneratorTable(Alphabet alphabet, std::vector<std::string> images);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& images() const noexcept { return images_; }
  const std::string& at(Letter a) const;

 private:
  Alphabet alphabet_;
  std::vector<std::string> images_;
};

struct WordHypothesesOk {
  std::size_t length;
};
struct WordLengthMismatch {
  Letter first, second;
};
/// ψ_{first→second} separates the images, first differing at `position`.
struct WordCompatibilityFailure {
  std::size_t position;
  Letter first, second;
};
using WordHypothesisCheck = std::variant<WordHypothesesOk, WordLengthMismatch, WordCompatibilityFailure>;

WordHypothesisCheck check_word_hypotheses(const WordGeneratorTable& g);

/// Position-wise synthesis: each column of the table is a letter table that
/// must be the identity (emit `x`) or a constant c (emit c). Throws
/// HypothesesViolated naming the failing position and letter pair.
WordPolynomial synthesize_word(const WordGeneratorTable& g);

}  // namespace treealg
