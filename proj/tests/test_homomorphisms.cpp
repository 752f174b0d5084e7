#include <doctest.h>

#include "helpers.hpp"
#include "treealg/homomorphisms.hpp"
#include "treealg/universe.hpp"

using namespace treealg;
using testing::abc;
using testing::T;

namespace {

// grafting as text rewriting on the encoding
std::string rewrite(const std::string& encoding, char a, const std::string& tau) {
  std::string out;
  for (char c : encoding) out += c == a ? tau : std::string(1, c);
  return out;
}

}  // namespace

TEST_CASE("grafting examples") {
  CHECK(graft({'a', T("<b*c>")}, T("<a*b>")) == T("<<b*c>*b>"));
  CHECK(graft({'a', T("<b*c>")}, T("c")) == T("c"));
  CHECK(graft({'a', T("a")}, T("<a*b>")) == T("<a*b>"));
  CHECK(graft({'b', T("<a*b>")}, T("<b*b>")) == T("<<a*b>*<a*b>>"));
}

TEST_CASE("grafting agrees with rewriting the encoding") {
  const auto u3 = enumerate_universe(abc(), 3);
  for (Letter a : abc())
    for (const Tree& tau : enumerate_universe(abc(), 2))
      for (const Tree& t : u3) CHECK(encode(graft({a, tau}, t)) == rewrite(encode(t), a, encode(tau)));
}

TEST_CASE("grafting is a homomorphism") {
  const auto u3 = enumerate_universe(abc(), 3);
  const Grafting g{'c', T("<a*c>")};
  for (const Tree& t : u3)
    for (const Tree& t2 : u3) CHECK(graft(g, star(t, t2)) == star(graft(g, t), graft(g, t2)));
}

TEST_CASE("word substitution") {
  CHECK(substitute({'a', "bc"}, "aba") == "bcbbc");
  CHECK(substitute({'a', ""}, "aba") == "b");
  CHECK(substitute({'c', "a"}, "ab") == "ab");
}

TEST_CASE("projections") {
  CHECK(project(Projection::sigma(), "<<a*c>*b>") == "<<*>*>");
  CHECK(project(Projection::phi(abc()), "<<a*c>*b>") == "acb");
  CHECK(project(Projection("ab"), "cabbac") == "abba");
  const std::string once = project(Projection("ab"), "cabbac");
  CHECK(project(Projection("ab"), once) == once);
  for (const Tree& t : enumerate_universe(abc(), 3)) {
    CHECK(project(Projection::sigma(), encode(t)) == skeleton(t).word);
    CHECK(project(Projection::phi(abc()), encode(t)) == foliage(t).word);
  }
}

TEST_CASE("idempotence letter criterion") {
  CHECK(is_idempotent({'a', T("<b*c>")}));
  CHECK_FALSE(is_idempotent({'a', T("<a*b>")}));
  CHECK_FALSE(is_idempotent({'a', T("a")}));
  CHECK(is_idempotent({'a', T("b")}));
}

TEST_CASE("commuting diagram") {
  for (Letter a : abc())
    for (const Tree& tau : enumerate_universe(abc(), 2))
      for (const Tree& t : enumerate_universe(abc(), 3)) CHECK(commute_check({a, tau}, t));
}

TEST_CASE("recolor") {
  CHECK(recolor(T("<<a*c>*b>"), 'c', abc()) == T("<<c*c>*c>"));
  CHECK(recolor(T("a"), 'b', abc()) == T("b"));
  CHECK(occurs('c', T("<a*<b*c>>")));
  CHECK_FALSE(occurs('c', T("<a*b>")));
}

TEST_CASE("kernel examples") {
  const Tree t = T("<<a*c>*b>");
  const Tree t2 = T("<a*<c*b>>");
  CHECK(kernel_related(Projection::phi(abc()), t, t2));
  CHECK_FALSE(kernel_related(Projection::sigma(), t, t2));
  CHECK(kernel_related(Projection::sigma(), T("<a*b>"), T("<c*c>")));
  CHECK(kernel_related(Grafting{'a', T("b")}, T("<a*c>"), T("<b*c>")));
  CHECK_FALSE(kernel_related(Grafting{'a', T("b")}, T("<a*c>"), T("<c*c>")));
}

TEST_CASE("kernels are congruences on U_5") {
  const auto u2 = enumerate_universe(abc(), 2);
  const auto u3 = enumerate_universe(abc(), 3);
  std::vector<Kernel> kernels = {Projection::sigma(), Projection::phi(abc()), Grafting{'a', T("<b*c>")},
                                 Grafting{'b', T("a")}};
  for (const Kernel& h : kernels) {
    // related pairs stay related after multiplying on either side
    for (const Tree& t : u3)
      for (const Tree& t2 : u3) {
        if (!kernel_related(h, t, t2)) continue;
        for (const Tree& s : u2) {
          CHECK(kernel_related(h, star(t, s), star(t2, s)));
          CHECK(kernel_related(h, star(s, t), star(s, t2)));
        }
      }
  }
}
