#include <doctest.h>

#include "helpers.hpp"
#include "treealg/errors.hpp"
#include "treealg/universe.hpp"

using namespace treealg;
using testing::abc;
using testing::T;

TEST_CASE("alphabet validation") {
  CHECK(Alphabet("ab").size() == 2);
  CHECK(Alphabet("cab").index_of('a') == 1u);
  CHECK_THROWS_AS(Alphabet(""), InvalidAlphabet);
  CHECK_THROWS_AS(Alphabet("aa"), InvalidAlphabet);
  CHECK_THROWS_AS(Alphabet("a*"), InvalidAlphabet);
  CHECK_THROWS_AS(Alphabet("ax"), InvalidAlphabet);
  CHECK_THROWS_AS(Alphabet("a b"), InvalidAlphabet);
}

TEST_CASE("parse and encode") {
  const Tree t = T("<<a*c>*b>");
  CHECK(t == star(star(Tree::leaf('a'), Tree::leaf('c')), Tree::leaf('b')));
  CHECK(T("<a*<c*b>>") == star(Tree::leaf('a'), star(Tree::leaf('c'), Tree::leaf('b'))));
  CHECK(T("a").is_leaf());
  CHECK(T("a").letter() == 'a');
  CHECK(t.leaf_count() == 3);
  CHECK(encode(t) == "<<a*c>*b>");
  CHECK(t != T("<a*<c*b>>"));
}

TEST_CASE("malformed trees are rejected") {
  for (const char* bad : {"", "<a*b", "a*b", "<a*b>>", "<ab>", "<a*>", "d", "<a*x>", " a", "<<a*b>*c", "ab"})
    CHECK_THROWS_AS(T(bad), MalformedTree);
  CHECK(encode(parse_term("<x*a>", abc())) == "<x*a>");
}

TEST_CASE("skeleton and foliage") {
  CHECK(skeleton(T("<<a*c>*b>")).word == "<<*>*>");
  CHECK(skeleton(T("<a*<c*b>>")).word == "<*<*>>");
  CHECK(skeleton(T("a")).word.empty());
  CHECK(foliage(T("<<a*c>*b>")).word == "acb");
  CHECK(foliage(T("<a*<c*b>>")).word == "acb");
  CHECK(foliage(T("b")).word == "b");
}

TEST_CASE("rebuild") {
  CHECK(rebuild(Foliage{"acb"}, Skeleton{"<<*>*>"}) == T("<<a*c>*b>"));
  CHECK(rebuild(Foliage{"abc"}, Skeleton{"<<*>*>"}) == T("<<a*b>*c>"));
  CHECK(rebuild(Foliage{"a"}, Skeleton{""}) == T("a"));
  CHECK_THROWS_AS(rebuild(Foliage{"ab"}, Skeleton{"<<*>*>"}), LengthMismatch);
  CHECK_THROWS_AS(rebuild(Foliage{"abc"}, Skeleton{""}), LengthMismatch);
  CHECK_THROWS_AS(rebuild(Foliage{""}, Skeleton{""}), LengthMismatch);
  CHECK_THROWS_AS(rebuild(Foliage{"abc"}, Skeleton{"<*><*>"}), MalformedSkeleton);
  CHECK_THROWS_AS(rebuild(Foliage{"abc"}, Skeleton{"<<**>>"}), MalformedSkeleton);
  CHECK_THROWS_AS(parse_skeleton("<a*b>"), MalformedSkeleton);
}

TEST_CASE("unicode rendering") {
  CHECK(to_unicode("<<a*c>*b>") == "◂◂a•c▸•b▸");
  CHECK(from_unicode(to_unicode("<<a*c>*b>")) == "<<a*c>*b>");
  CHECK(from_unicode("<a*b>") == "<a*b>");
}

TEST_CASE("parse round-trip on U_6") {
  std::size_t n = 0;
  for_each_tree(abc(), 6, [&](const Tree& t) {
    ++n;
    if (parse_tree(encode(t), abc()) != t) FAIL("round-trip fails on " << encode(t));
  });
  CHECK(n == 34491);
}

TEST_CASE("structural hashing agrees with equality") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Tree t = testing::random_tree(rng, 1 + rng() % 8, "abc");
    const Tree copy = T(encode(t));
    CHECK(copy == t);
    CHECK(copy.hash() == t.hash());
  }
}
