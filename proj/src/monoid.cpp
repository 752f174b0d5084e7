#include "treealg/monoid.hpp"

#include "treealg/errors.hpp"
#include "treealg/homomorphisms.hpp"

namespace treealg {

WordPolynomial parse_word_polynomial(std::string_view text, const Alphabet& alphabet) {
  if (text.empty()) throw MalformedTree("word polynomial must be nonempty");
  for (char c : text)
    if (c != kVariable && !alphabet.contains(c))
      throw MalformedTree(std::string("unexpected symbol '") + c + "' in word polynomial", {std::string(text)});
  return WordPolynomial{std::string(text)};
}

std::string eval_word_poly(const WordPolynomial& p, std::string_view w) {
  return substitute(WordSubstitution{kVariable, std::string(w)}, p.term);
}

WordGeneratorTable::WordGeneratorTable(Alphabet alphabet, std::vector<std::string> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size())
    throw InvalidAlphabet("word table needs exactly one image per letter (" + std::to_string(alphabet_.size()) +
                          " letters, " + std::to_string(images_.size()) + " images)");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].empty()) throw EmptyImage("image words must be nonempty", {std::string(1, alphabet_[i])});
    for (char c : images_[i])
      if (!alphabet_.contains(c)) throw MalformedTree("image uses a letter outside the alphabet", {images_[i]});
  }
}

const std::string& WordGeneratorTable::at(Letter a) const {
  const auto i = alphabet_.index_of(a);
  if (!i) throw InvalidAlphabet("letter is not in the alphabet", {std::string(1, a)});
  return images_[*i];
}

WordHypothesisCheck check_word_hypotheses(const WordGeneratorTable& g) {
  const Alphabet& sigma = g.alphabet();
  const auto& images = g.images();
  for (std::size_t i = 1; i < images.size(); ++i)
    if (images[i].size() != images[0].size()) return WordLengthMismatch{sigma[0], sigma[i]};

  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      const WordSubstitution psi{sigma[i], std::string(1, sigma[j])};
      const std::string u = substitute(psi, images[i]);
      const std::string v = substitute(psi, images[j]);
      if (u == v) continue;
      std::size_t pos = 0;
      while (u[pos] == v[pos]) ++pos;
      return WordCompatibilityFailure{pos, sigma[i], sigma[j]};
    }
  }
  return WordHypothesesOk{images[0].size()};
}

WordPolynomial synthesize_word(const WordGeneratorTable& g) {
  const auto& images = g.images();
  const Alphabet& sigma = g.alphabet();
  auto witness = [&](Letter a, Letter b) {
    return std::vector<std::string>{std::string(1, a), std::string(1, b), g.at(a), g.at(b)};
  };

  const WordHypothesisCheck check = check_word_hypotheses(g);
  if (const auto* m = std::get_if<WordLengthMismatch>(&check))
    throw HypothesesViolated(std::string("images of ") + m->first + " and " + m->second + " differ in length",
                             witness(m->first, m->second));
  if (const auto* c = std::get_if<WordCompatibilityFailure>(&check))
    throw HypothesesViolated("substituting " + std::string(1, c->second) + " for " + c->first +
                                 " separates their images at position " + std::to_string(c->position),
                             witness(c->first, c->second));

  WordPolynomial out;
  const std::size_t length = images[0].size();
  for (std::size_t pos = 0; pos < length; ++pos) {
    char emitted = kVariable;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i][pos] == sigma[i]) continue;
      emitted = images[i][pos];
      for (std::size_t j = 0; j < images.size(); ++j)
        if (images[j][pos] != emitted)
          throw HypothesesViolated("letter table at position " + std::to_string(pos) +
                                       " is neither the identity nor constant",
                                   witness(sigma[i], sigma[j]));
      break;
    }
    out.term.push_back(emitted);
  }
  return out;
}

}  // namespace treealg
