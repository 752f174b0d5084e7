#include "treealg/homomorphisms.hpp"

#include <type_traits>

namespace treealg {

Projection::Projection(std::string_view kept) {
  for (char c : kept) kept_.set(static_cast<unsigned char>(c));
}

Projection Projection::sigma() {
  return Projection(std::string{kOpen, kDot, kClose});
}

Projection Projection::phi(const Alphabet& alphabet) { return Projection(alphabet.symbols()); }

bool occurs(Letter c, const Tree& t) {
  if (t.is_leaf()) return t.letter() == c;
  return occurs(c, t.left()) || occurs(c, t.right());
}

Tree replace_leaves(const Tree& t, Letter source, const Tree& replacement) {
  if (t.is_leaf()) return t.letter() == source ? replacement : t;
  Tree l = replace_leaves(t.left(), source, replacement);
  Tree r = replace_leaves(t.right(), source, replacement);
  if (l == t.left() && r == t.right()) return t;
  return star(std::move(l), std::move(r));
}

Tree graft(const Grafting& g, const Tree& t) { return replace_leaves(t, g.source, g.replacement); }

std::string substitute(const WordSubstitution& s, std::string_view w) {
  std::string out;
  out.reserve(w.size());
  for (char c : w) {
    if (c == s.source) {
      out += s.replacement;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string project(const Projection& p, std::string_view w) {
  std::string out;
  for (char c : w)
    if (p.keeps(c)) out.push_back(c);
  return out;
}

bool is_idempotent(const Grafting& g) { return !occurs(g.source, g.replacement); }

bool commute_check(const Grafting& g, const Tree& t) {
  const WordSubstitution psi{g.source, foliage(g.replacement).word};
  return foliage(graft(g, t)).word == substitute(psi, foliage(t).word);
}

Tree recolor(const Tree& t, Letter c, const Alphabet& alphabet) {
  Tree out = t;
  const Tree target = Tree::leaf(c);
  for (Letter d : alphabet)
    if (d != c) out = graft(Grafting{d, target}, out);
  return out;
}

bool kernel_related(const Kernel& h, const Tree& t, const Tree& t2) {
  return std::visit(
      [&](const auto& hom) -> bool {
        using H = std::decay_t<decltype(hom)>;
        if constexpr (std::is_same_v<H, Grafting>) {
          return graft(hom, t) == graft(hom, t2);
        } else {
          return project(hom, encode(t)) == project(hom, encode(t2));
        }
      },
      h);
}

}  // namespace treealg
