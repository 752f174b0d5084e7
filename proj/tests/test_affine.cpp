#include <doctest.h>

#include "helpers.hpp"
#include "treealg/affine.hpp"
#include "treealg/errors.hpp"
#include "treealg/homomorphisms.hpp"
#include "treealg/universe.hpp"

using namespace treealg;
using testing::abc;
using testing::T;

namespace {

Polynomial P(std::string_view text) { return parse_polynomial(text, abc()); }

GeneratorTable table_of(const Polynomial& p) {
  std::vector<Tree> images;
  for (Letter a : abc()) images.push_back(eval_poly(p, Tree::leaf(a)));
  return GeneratorTable(abc(), std::move(images));
}

}  // namespace

TEST_CASE("polynomial evaluation") {
  CHECK(eval_poly(P("<x*c>"), T("<a*b>")) == T("<<a*b>*c>"));
  CHECK(eval_poly(P("<x*x>"), T("a")) == T("<a*a>"));
  CHECK(eval_poly(P("b"), T("<a*a>")) == T("b"));
  CHECK(encode(P("<x*<a*x>>")) == "<x*<a*x>>");
  CHECK_THROWS_AS(P("<x*y>"), MalformedTree);
}

TEST_CASE("generator table validation") {
  CHECK_THROWS(GeneratorTable(abc(), {T("a"), T("b")}));
  CHECK(GeneratorTable(abc(), {T("a"), T("b"), T("c")}).at('b') == T("b"));
}

TEST_CASE("hypothesis checks") {
  CHECK(std::holds_alternative<HypothesesOk>(check_hypotheses(table_of(P("<x*c>")))));
  const HypothesisCheck mismatch = check_hypotheses(GeneratorTable(abc(), {T("a"), T("<b*c>"), T("c")}));
  REQUIRE(std::holds_alternative<SkeletonMismatch>(mismatch));
  CHECK(std::get<SkeletonMismatch>(mismatch).first == 'a');
  CHECK(std::get<SkeletonMismatch>(mismatch).second == 'b');
  const HypothesisCheck swap = check_hypotheses(GeneratorTable(abc(), {T("b"), T("a"), T("c")}));
  REQUIRE(std::holds_alternative<CompatibilityFailure>(swap));
  CHECK(std::get<CompatibilityFailure>(swap).first == 'a');
  CHECK(std::get<CompatibilityFailure>(swap).second == 'c');
}

TEST_CASE("synthesis examples") {
  CHECK(synthesize(table_of(P("x"))) == P("x"));
  CHECK(synthesize(table_of(P("c"))) == P("c"));
  CHECK(synthesize(table_of(P("<x*c>"))) == P("<x*c>"));
  CHECK(synthesize(GeneratorTable(abc(), {T("<a*c>"), T("<b*c>"), T("<c*c>")})) == P("<x*c>"));
  CHECK(synthesize(table_of(P("<<x*a>*<b*x>>"))) == P("<<x*a>*<b*x>>"));
}

TEST_CASE("synthesis rejects with a witness") {
  try {
    synthesize(GeneratorTable(abc(), {T("b"), T("a"), T("c")}));
    FAIL("expected HypothesesViolated");
  } catch (const HypothesesViolated& e) {
    REQUIRE(e.witness().size() == 4);
    CHECK(e.witness()[0] == "a");
    CHECK(e.witness()[1] == "c");
  }
}

TEST_CASE("letter tables: identity, constant or rejected") {
  std::size_t accepted = 0;
  for (Letter fa : abc())
    for (Letter fb : abc())
      for (Letter fc : abc()) {
        const GeneratorTable g(abc(), {Tree::leaf(fa), Tree::leaf(fb), Tree::leaf(fc)});
        const bool identity = fa == 'a' && fb == 'b' && fc == 'c';
        const bool constant = fa == fb && fb == fc;
        const bool ok = std::holds_alternative<HypothesesOk>(check_hypotheses(g));
        CHECK(ok == (identity || constant));
        if (ok) {
          const Polynomial p = synthesize(g);
          CHECK(encode(p) == (identity ? std::string("x") : std::string(1, fa)));
        } else {
          CHECK_THROWS_AS(synthesize(g), HypothesesViolated);
        }
        accepted += ok;
      }
  CHECK(accepted == 4);
}

TEST_CASE("two-letter swap is rejected") {
  const Alphabet ab("ab");
  const GeneratorTable swap(ab, {Tree::leaf('b'), Tree::leaf('a')});
  CHECK_THROWS_AS(synthesize(swap), HypothesesViolated);
}

TEST_CASE("unused letters") {
  CHECK(unused_letter_count(T("<a*b>"), abc()) == 1);
  CHECK(unused_letter_count(T("<<a*b>*c>"), abc()) == 0);
  CHECK(unused_letter_count(T("a"), abc()) == 2);
}

TEST_CASE("polynomials are determined by two unused letters") {
  // f(t) is fixed by f on letters when t misses two letters: compare a polynomial with its synthesis
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const Polynomial p{testing::random_tree(rng, 1 + rng() % 4, "abcx")};
    const Polynomial q = synthesize(table_of(p));
    for (const Tree& t : enumerate_universe(abc(), 4))
      if (unused_letter_count(t, abc()) >= 2) CHECK(eval_poly(p, t) == eval_poly(q, t));
  }
}

TEST_CASE("evidence for congruence-preserving functions") {
  for (const CandidateFunction& f : {CandidateFunction::identity(abc()), CandidateFunction::constant(T("<a*b>"), abc()),
                                     CandidateFunction::polynomial(P("<x*<c*x>>"), abc())}) {
    const EvidenceReport r = cp_evidence(f, abc(), 3);
    CHECK(r.all_passed());
    CHECK(r.tests.size() == 4);
    CHECK(r.first_failure() == nullptr);
  }
}

TEST_CASE("mirror fails the idempotent-grafting family") {
  const EvidenceReport r = cp_evidence(CandidateFunction::mirror(abc()), abc(), 3);
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.tests[0].passed);
  CHECK(r.tests[1].passed);
  CHECK_FALSE(r.tests[3].passed);
  const EvidenceWitness& w = *r.tests[3].witness;
  REQUIRE(w.grafting.has_value());
  CHECK(w.image_first != w.image_second);
  CHECK(graft(*w.grafting, mirror(w.first)) == w.image_first);
  CHECK(graft(*w.grafting, mirror(w.second)) == w.image_second);
}

TEST_CASE("recolor is not congruence preserving") {
  const EvidenceReport r = cp_evidence(CandidateFunction::recolor('c', abc()), abc(), 3);
  CHECK_FALSE(r.all_passed());
}

TEST_CASE("evidence is reproducible") {
  const CandidateFunction f = CandidateFunction::polynomial(P("<x*a>"), abc());
  const EvidenceReport r1 = cp_evidence(f, abc(), 3, 5);
  const EvidenceReport r2 = cp_evidence(f, abc(), 3, 5);
  REQUIRE(r1.tests.size() == r2.tests.size());
  for (std::size_t i = 0; i < r1.tests.size(); ++i) CHECK(r1.tests[i].checked == r2.tests[i].checked);
}

TEST_CASE("recovering polynomials from functions") {
  CHECK(cp_to_polynomial(CandidateFunction::identity(abc()), abc(), 4) == P("x"));
  CHECK(cp_to_polynomial(CandidateFunction::constant(T("<a*b>"), abc()), abc(), 4) == P("<a*b>"));
  CHECK(cp_to_polynomial(CandidateFunction::polynomial(P("<c*<x*x>>"), abc()), abc(), 4) == P("<c*<x*x>>"));
  CHECK_THROWS_AS(cp_to_polynomial(CandidateFunction::mirror(abc()), abc(), 4), NotCP);
  const Alphabet ab("ab");
  CHECK_THROWS_AS(cp_to_polynomial(CandidateFunction::identity(ab), ab, 4), AlphabetTooSmall);
}

TEST_CASE("partial tables fail to evaluate") {
  std::unordered_map<Tree, Tree, TreeHash> values{{T("a"), T("b")}};
  const CandidateFunction f = CandidateFunction::table(std::move(values), "table:partial", abc());
  CHECK(f(T("a")) == T("b"));
  CHECK_THROWS_AS(f(T("c")), EvaluationFailure);
}
