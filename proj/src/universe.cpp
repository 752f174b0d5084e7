#include "treealg/universe.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "treealg/errors.hpp"

namespace treealg {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return b > kSaturated - a ? kSaturated : a + b; }

// Unlabeled shapes with `leaves` leaves,
// sorted in skeleton order. Leaves carry a placeholder letter.
std::vector<Tree> sorted_shapes(std::size_t leaves) {
  std::vector<std::vector<Tree>> by_size(leaves + 1);
  by_size[1].push_back(Tree::leaf(0));
  for (std::size_t n = 2; n <= leaves; ++n)
    for (std::size_t i = 1; i < n; ++i)
      for (const Tree& l : by_size[i])
        for (const Tree& r : by_size[n - i]) by_size[n].push_back(star(l, r));

  std::vector<std::pair<std::string, Tree>> keyed;
  keyed.reserve(by_size[leaves].size());
  for (const Tree& s : by_size[leaves]) keyed.emplace_back(skeleton(s).word, s);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return skeleton_less(a.first, b.first); });

  std::vector<Tree> out;
  out.reserve(keyed.size());
  for (auto& [_, s] : keyed) out.push_back(std::move(s));
  return out;
}

Tree label(const Tree& shape, const std::string& word, std::size_t& pos) {
  if (shape.is_leaf()) return Tree::leaf(word[pos++]);
  Tree l = label(shape.left(), word, pos);
  Tree r = label(shape.right(), word, pos);
  return star(std::move(l), std::move(r));
}

}  // namespace

std::uint64_t tree_count(std::size_t letters, std::size_t leaves) {
  if (leaves == 0) return 0;
  // Catalan(m) via C(m+1) = C(m) * 2(2m+1)/(m+2), intermediate products fit 64 bits up to m = 30.
  const std::size_t m = leaves - 1;
  std::uint64_t catalan = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (i >= 30) return kSaturated;
    catalan = catalan * 2 * (2 * i + 1) / (i + 2);
  }
  std::uint64_t result = catalan;
  for (std::size_t i = 0; i < leaves; ++i) result = sat_mul(result, letters);
  return result;
}

std::uint64_t universe_size(std::size_t letters, std::size_t max_leaves) {
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= max_leaves; ++n) total = sat_add(total, tree_count(letters, n));
  return total;
}

std::vector<Skeleton> skeletons_with_leaves(std::size_t leaves) {
  std::vector<Skeleton> out;
  if (leaves == 0) return out;
  for (const Tree& s : sorted_shapes(leaves)) out.push_back(skeleton(s));
  return out;
}

void for_each_labeled_tree(std::string_view letters, std::size_t leaves,
                           const std::function<void(const Tree&)>& visit) {
  if (leaves == 0 || letters.empty()) return;
  const std::vector<Tree> shapes = sorted_shapes(leaves);
  const std::size_t k = letters.size();
  for (const Tree& shape : shapes) {
    std::vector<std::size_t> digits(leaves, 0);
    std::string word(leaves, letters[0]);
    bool exhausted = false;
    while (!exhausted) {
      std::size_t pos = 0;
      visit(label(shape, word, pos));
      // odometer, last position fastest
      exhausted = true;
      for (std::size_t i = leaves; i-- > 0;) {
        if (++digits[i] < k) {
          word[i] = letters[digits[i]];
          exhausted = false;
          break;
        }
        digits[i] = 0;
        word[i] = letters[0];
      }
    }
  }
}

void for_each_tree_with_leaves(const Alphabet& alphabet, std::size_t leaves,
                               const std::function<void(const Tree&)>& visit) {
  for_each_labeled_tree(alphabet.symbols(), leaves, visit);
}

void for_each_tree(const Alphabet& alphabet, std::size_t max_leaves,
                   const std::function<void(const Tree&)>& visit) {
  for (std::size_t n = 1; n <= max_leaves; ++n) for_each_tree_with_leaves(alphabet, n, visit);
}

std::vector<Tree> enumerate_universe(const Alphabet& alphabet, std::size_t max_leaves, std::size_t cap) {
  const std::uint64_t size = universe_size(alphabet.size(), max_leaves);
  if (size > cap)
    throw UniverseTooLarge("universe of trees with at most " + std::to_string(max_leaves) + " leaves has " +
                           std::to_string(size) + " trees, above the cap of " + std::to_string(cap));
  std::vector<Tree> out;
  out.reserve(static_cast<std::size_t>(size));
  for_each_tree(alphabet, max_leaves, [&](const Tree& t) { out.push_back(t); });
  return out;
}

bool enumeration_less(const Alphabet& alphabet, const Tree& a, const Tree& b) {
  if (a.leaf_count() != b.leaf_count()) return a.leaf_count() < b.leaf_count();
  const Skeleton sa = skeleton(a), sb = skeleton(b);
  if (sa != sb) return skeleton_less(sa.word, sb.word);
  const Foliage fa = foliage(a), fb = foliage(b);
  return std::lexicographical_compare(fa.word.begin(), fa.word.end(), fb.word.begin(), fb.word.end(),
                                      [&](char x, char y) { return *alphabet.index_of(x) < *alphabet.index_of(y); });
}

}  // namespace treealg
