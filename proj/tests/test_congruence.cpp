#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "treealg/congruence.hpp"
#include "treealg/errors.hpp"
#include "treealg/homomorphisms.hpp"
#include "treealg/universe.hpp"

using namespace treealg;
using testing::abc;
using testing::T;

namespace {

// Least congruence by naive fixpoint iteration over a class-label array.
std::vector<std::size_t> naive_closure(const PairSet& pairs, const std::vector<Tree>& u) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < u.size(); ++i) index[encode(u[i])] = i;
  std::vector<std::size_t> label(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) label[i] = i;
  auto merge = [&](std::size_t x, std::size_t y) {
    const std::size_t from = std::max(label[x], label[y]), to = std::min(label[x], label[y]);
    if (from == to) return false;
    for (std::size_t& l : label)
      if (l == from) l = to;
    return true;
  };
  for (const auto& [l, r] : pairs) merge(index.at(encode(l)), index.at(encode(r)));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[i].is_leaf() || u[j].is_leaf()) continue;
        const std::size_t li = index.at(encode(u[i].left())), ri = index.at(encode(u[i].right()));
        const std::size_t lj = index.at(encode(u[j].left())), rj = index.at(encode(u[j].right()));
        if (label[li] == label[lj] && label[ri] == label[rj]) changed |= merge(i, j);
      }
  }
  return label;
}

std::vector<std::vector<std::string>> classes_as_text(const TreePartition& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& cls : p.classes()) {
    out.emplace_back();
    for (std::size_t i : cls) out.back().push_back(encode(p.universe()[i]));
  }
  return out;
}

}  // namespace

TEST_CASE("empty generator set gives the identity partition") {
  const TreePartition p = bounded_closure({}, abc(), 3);
  CHECK(p.class_count() == 66);
}

TEST_CASE("a ~ b at bound 2") {
  const TreePartition p = bounded_closure({{T("a"), T("b")}}, abc(), 2);
  const std::vector<std::vector<std::string>> expected = {
      {"a", "b"}, {"c"}, {"<a*a>", "<a*b>", "<b*a>", "<b*b>"}, {"<a*c>", "<b*c>"}, {"<c*a>", "<c*b>"}, {"<c*c>"}};
  CHECK(classes_as_text(p) == expected);
  CHECK(p.related(T("<a*c>"), T("<b*c>")));
  CHECK_FALSE(p.related(T("<a*c>"), T("<c*b>")));
}

TEST_CASE("a ~ <a*a> at bound 3") {
  const TreePartition p = bounded_closure({{T("a"), T("<a*a>")}}, abc(), 3);
  CHECK(p.related(T("a"), T("<<a*a>*a>")));
  CHECK(p.related(T("<a*a>"), T("<a*<a*a>>")));
  CHECK_FALSE(p.related(T("a"), T("b")));
  CHECK(p.related(T("<a*b>"), T("<<a*a>*b>")));
}

TEST_CASE("agreement with a naive fixpoint") {
  auto u = std::make_shared<const Universe>(abc(), 3);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    PairSet pairs;
    const std::size_t n = 1 + rng() % 3;
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back((*u)[rng() % u->size()], (*u)[rng() % u->size()]);
    const TreePartition p = bounded_closure(pairs, u);
    const std::vector<std::size_t> oracle = naive_closure(pairs, u->trees());
    for (std::size_t i = 0; i < u->size(); ++i) CHECK(p.representative(i) == oracle[i]);
  }
}

TEST_CASE("minimality: splitting any class breaks the congruence") {
  const TreePartition p = bounded_closure({{T("a"), T("b")}}, abc(), 2);
  const Universe& u = p.universe();
  for (const auto& cls : p.classes()) {
    if (cls.size() < 2) continue;
    // move one member into a class of its own; the generator or a product law then fails
    const std::size_t moved = cls.back();
    std::vector<std::uint32_t> rep = p.representatives();
    rep[moved] = static_cast<std::uint32_t>(moved);
    auto rel = [&](std::size_t i, std::size_t j) { return rep[i] == rep[j]; };
    bool broken = !rel(*u.index_of(T("a")), *u.index_of(T("b")));
    for (std::size_t i = 0; i < u.size() && !broken; ++i)
      for (std::size_t j = 0; j < u.size() && !broken; ++j) {
        const auto [li, ri] = u.children(i);
        const auto [lj, rj] = u.children(j);
        if (li == Universe::kNoChild || lj == Universe::kNoChild) continue;
        broken = rel(li, lj) && rel(ri, rj) && !rel(i, j);
      }
    CHECK(broken);
  }
}

TEST_CASE("closure is sound for grafting kernels") {
  auto u = std::make_shared<const Universe>(abc(), 3);
  const Grafting h{'a', T("b")};
  const TreePartition p = bounded_closure({{T("a"), T("b")}, {T("<a*c>"), T("<b*c>")}}, u);
  for (std::size_t i = 0; i < u->size(); ++i) CHECK(kernel_related(h, (*u)[i], (*u)[p.representative(i)]));
}

TEST_CASE("closure is deterministic and monotone in the bound") {
  const PairSet gens = {{T("<a*b>"), T("c")}};
  CHECK(bounded_closure(gens, abc(), 4) == bounded_closure(gens, abc(), 4));
  const TreePartition small = bounded_closure(gens, abc(), 3);
  const TreePartition large = bounded_closure(gens, abc(), 4);
  for (std::size_t i = 0; i < small.universe().size(); ++i)
    for (std::size_t j = 0; j < small.universe().size(); ++j)
      if (small.representative(i) == small.representative(j)) CHECK(large.representative(i) == large.representative(j));
}

TEST_CASE("pairs outside the universe") {
  CHECK_THROWS_AS(bounded_closure({{T("a"), T("<<a*a>*a>")}}, abc(), 2), PairOutOfUniverse);
}

TEST_CASE("principal congruence membership") {
  CHECK(principal_related(T("a"), T("b"), T("<a*c>"), T("<b*c>"), abc(), 2) == PrincipalVerdict::Related);
  CHECK(principal_related(T("a"), T("b"), T("a"), T("c"), abc(), 2) == PrincipalVerdict::UnknownAtBound);
}
