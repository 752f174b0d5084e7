#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "treealg/errors.hpp"
#include "treealg/universe.hpp"

using namespace treealg;
using testing::abc;

namespace {

// number of trees with exactly n leaves over k letters, by splitting at the root
std::uint64_t count_by_split(std::size_t k, std::size_t n) {
  static std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> memo;
  if (n == 1) return k;
  auto [it, fresh] = memo.try_emplace({k, n}, 0);
  if (!fresh) return it->second;
  std::uint64_t total = 0;
  for (std::size_t left = 1; left < n; ++left) total += count_by_split(k, left) * count_by_split(k, n - left);
  memo[{k, n}] = total;
  return total;
}

}  // namespace

TEST_CASE("small universe sizes") {
  CHECK(enumerate_universe(abc(), 1).size() == 3);
  CHECK(enumerate_universe(abc(), 2).size() == 12);
  CHECK(tree_count(3, 3) == 54);
  CHECK(universe_size(3, 8) == 3137844);
}

TEST_CASE("counts agree with the root-split recurrence") {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t n = 1; n <= 8; ++n) CHECK(tree_count(k, n) == count_by_split(k, n));
}

TEST_CASE("enumeration order") {
  const std::vector<Tree> u2 = enumerate_universe(abc(), 2);
  CHECK(encode(u2[0]) == "a");
  CHECK(encode(u2[2]) == "c");
  CHECK(encode(u2[3]) == "<a*a>");
  CHECK(encode(u2[11]) == "<c*c>");
  const std::vector<Tree> u3 = enumerate_universe(abc(), 3);
  // '<' precedes '*', so <<*>*> comes first among the three-leaf shapes
  CHECK(encode(u3[12]) == "<<a*a>*a>");
  CHECK(encode(u3[39]) == "<a*<a*a>>");
  for (std::size_t i = 1; i < u3.size(); ++i) CHECK(enumeration_less(abc(), u3[i - 1], u3[i]));
}

TEST_CASE("enumeration lists distinct trees and is deterministic") {
  const std::vector<Tree> u4 = enumerate_universe(abc(), 4);
  std::set<std::string> seen;
  for (const Tree& t : u4) seen.insert(encode(t));
  CHECK(seen.size() == u4.size());
  CHECK(enumerate_universe(abc(), 4) == u4);
}

TEST_CASE("streaming matches materialised enumeration") {
  std::vector<Tree> streamed;
  for_each_tree(abc(), 5, [&](const Tree& t) { streamed.push_back(t); });
  CHECK(streamed == enumerate_universe(abc(), 5));
}

TEST_CASE("skeletons by leaf count") {
  CHECK(skeletons_with_leaves(1).size() == 1);
  CHECK(skeletons_with_leaves(4).size() == 5);
  CHECK(skeletons_with_leaves(6).size() == 42);
  CHECK(skeletons_with_leaves(3)[0].word == "<<*>*>");
}

TEST_CASE("cap is enforced") {
  CHECK_THROWS_AS(enumerate_universe(abc(), 8), UniverseTooLarge);
  CHECK_THROWS_AS(enumerate_universe(abc(), 3, 10), UniverseTooLarge);
  CHECK(enumerate_universe(abc(), 3, 66).size() == 66);
}
