#include "treealg/affine.hpp"

#include <string>

#include "treealg/errors.hpp"

namespace treealg {

Polynomial parse_polynomial(std::string_view text, const Alphabet& alphabet) {
  return Polynomial{parse_term(text, alphabet)};
}

std::string encode(const Polynomial& p) { return encode(p.term); }

Tree eval_poly(const Polynomial& p, const Tree& t) { return replace_leaves(p.term, kVariable, t); }

GeneratorTable::GeneratorTable(Alphabet alphabet, std::vector<Tree> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size())
    throw InvalidAlphabet("generator table needs exactly one image per letter (" + std::to_string(alphabet_.size()) +
                          " letters, " + std::to_string(images_.size()) + " images)");
  for (const Tree& t : images_) {
    for (char c : foliage(t).word)
      if (!alphabet_.contains(c)) throw MalformedTree("image uses a letter outside the alphabet", {encode(t)});
  }
}

const Tree& GeneratorTable::at(Letter a) const {
  const auto i = alphabet_.index_of(a);
  if (!i) throw InvalidAlphabet("letter is not in the alphabet", {std::string(1, a)});
  return images_[*i];
}

HypothesisCheck check_hypotheses(const GeneratorTable& g) {
  const Alphabet& sigma = g.alphabet();
  const auto& images = g.images();
  const Skeleton common = skeleton(images[0]);
  for (std::size_t i = 1; i < images.size(); ++i)
    if (skeleton(images[i]) != common) return SkeletonMismatch{sigma[0], sigma[i]};

  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      const Grafting gamma{sigma[i], Tree::leaf(sigma[j])};
      if (graft(gamma, images[i]) != graft(gamma, images[j])) return CompatibilityFailure{sigma[i], sigma[j]};
    }
  }
  return HypothesesOk{common};
}

namespace {

[[noreturn]] void violated(const std::string& what, const std::string& path, const GeneratorTable& g, Letter a,
                           Letter b) {
  throw HypothesesViolated(what + " for letters " + a + ", " + b + " at path '" + path + "'",
                           {std::string(1, a), std::string(1, b), encode(g.at(a)), encode(g.at(b))});
}

Tree synthesize_at(const GeneratorTable& g, const std::string& path) {
  const HypothesisCheck check = check_hypotheses(g);
  if (const auto* m = std::get_if<SkeletonMismatch>(&check))
    violated("images have different skeletons", path, g, m->first, m->second);
  if (const auto* c = std::get_if<CompatibilityFailure>(&check))
    violated("grafting the first letter onto the second separates their images", path, g, c->first, c->second);

  const Alphabet& sigma = g.alphabet();
  const auto& images = g.images();
  if (images[0].is_leaf()) {
    // Basis: every image is a letter. Either each letter maps to itself, or
    // one letter maps elsewhere and then every letter maps to that constant.
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i].letter() == sigma[i]) continue;
      const Letter c = images[i].letter();
      for (std::size_t j = 0; j < images.size(); ++j)
        if (images[j].letter() != c) violated("letter table is neither the identity nor constant", path, g, sigma[i], sigma[j]);
      return Tree::leaf(c);
    }
    return Tree::leaf(kVariable);
  }

  std::vector<Tree> left, right;
  left.reserve(images.size());
  right.reserve(images.size());
  for (const Tree& t : images) {
    left.push_back(t.left());
    right.push_back(t.right());
  }
  return star(synthesize_at(GeneratorTable(sigma, std::move(left)), path + "L"),
              synthesize_at(GeneratorTable(sigma, std::move(right)), path + "R"));
}

}  // namespace

Polynomial synthesize(const GeneratorTable& g) { return Polynomial{synthesize_at(g, "")}; }

std::size_t unused_letter_count(const Tree& t, const Alphabet& alphabet) {
  std::vector<bool> seen(alphabet.size(), false);
  for (char c : foliage(t).word)
    if (auto i = alphabet.index_of(c)) seen[*i] = true;
  std::size_t unused = 0;
  for (bool s : seen) unused += !s;
  return unused;
}

}  // namespace treealg
