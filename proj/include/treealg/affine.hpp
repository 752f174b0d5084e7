#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "treealg/alphabet.hpp"
#include "treealg/homomorphisms.hpp"
#include "treealg/tree.hpp"

namespace treealg {

inline constexpr std::size_t kDefaultVerifyBound = 6;

/// A tree over the alphabet extended with the variable `x`.
struct Polynomial {
  Tree term;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Accepts the tree grammar with `x` allowed as a leaf. Throws MalformedTree.
Polynomial parse_polynomial(std::string_view text, const Alphabet& alphabet);
std::string encode(const Polynomial& p);

/// T(t): graft `t` at every occurrence of `x`.
Tree eval_poly(const Polynomial& p, const Tree& t);

/// The polynomial function's values on the generators: one image per letter,
/// stored in alphabet order.
class GeneratorTable {
 public:
  GeneratorTable(Alphabet alphabet, std::vector<Tree> images);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Tree>& images() const noexcept { return images_; }
  const Tree& at(Letter a) const;

 private:
  Alphabet alphabet_;
  std::vector<Tree> images_;
};

struct HypothesesOk {
  Skeleton common;
};
/// Images of `first` and `second` have different skeletons.
struct SkeletonMismatch {
  Letter first, second;
};
/// Γ_{first→second} separates the images of `first` and `second`.
struct CompatibilityFailure {
  Letter first, second;
};
using HypothesisCheck = std::variant<HypothesesOk, SkeletonMismatch, CompatibilityFailure>;

/// Checks (1) all images share a skeleton, comparing each letter with the
/// first one, and (2) Γ_{a→b}(g(a)) = Γ_{a→b}(g(b)) for every pair a < b in
/// alphabet order. Reports the first failing pair.
HypothesisCheck check_hypotheses(const GeneratorTable& g);

/// The unique polynomial taking the tabled values on the generators.
/// Re-checks the hypotheses at every level of the descent; throws
/// HypothesesViolated with the failing pair and the descent path.
Polynomial synthesize(const GeneratorTable& g);

/// Number of alphabet letters absent from the foliage of `t`.
std::size_t unused_letter_count(const Tree& t, const Alphabet& alphabet);

/// A candidate function on trees: one of a closed set of built-ins, or a
/// finite table.
class CandidateFunction {
 public:
  struct Identity {};
  struct Mirror {};
  struct Recolor {
    Letter target;
  };
  struct Constant {
    Tree value;
  };
  struct PolynomialFn {
    Polynomial poly;
  };
  struct Table {
    std::unordered_map<Tree, Tree, TreeHash> values;
  };
  using Kind = std::variant<Identity, Mirror, Recolor, Constant, PolynomialFn, Table>;

  CandidateFunction(Kind kind, std::string name, Alphabet alphabet);

  static CandidateFunction identity(const Alphabet& alphabet);
  static CandidateFunction mirror(const Alphabet& alphabet);
  static CandidateFunction recolor(Letter target, const Alphabet& alphabet);
  static CandidateFunction constant(Tree value, const Alphabet& alphabet);
  static CandidateFunction polynomial(Polynomial p, const Alphabet& alphabet);
  static CandidateFunction table(std::unordered_map<Tree, Tree, TreeHash> values, std::string name,
                                 const Alphabet& alphabet);

  /// Throws EvaluationFailure when a table has no entry for `t`.
  Tree operator()(const Tree& t) const;

  const std::string& name() const noexcept { return name_; }

 private:
  Kind kind_;
  std::string name_;
  Alphabet alphabet_;
};

/// Recursively swaps the children of every node.
Tree mirror(const Tree& t);

struct EvidenceWitness {
  Tree first;
  Tree second;
  Tree image_first;
  Tree image_second;
  std::optional<Grafting> grafting;
};

struct EvidenceTest {
  std::string name;
  std::string description;
  bool passed = true;
  std::size_t checked = 0;
  std::optional<EvidenceWitness> witness;
};

/// Outcome of the necessary-condition checks. Passing every test is
/// evidence of congruence preservation; any failure disproves it.
struct EvidenceReport {
  std::string function;
  std::size_t bound = 0;
  std::uint64_t seed = 0;
  std::vector<EvidenceTest> tests;

  bool all_passed() const;
  /// The first failing test, if any.
  const EvidenceTest* first_failure() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr std::size_t kRandomGraftings = 100;

/// Runs four families of checks over U_bound:
///   skeleton-kernel, foliage-kernel, grafting-kernels (all Γ_{a→τ} with
///   τ in U_2 plus 100 seeded random τ in U_4), and the idempotent-grafting
///   identity Γ_{a→t}(f(a)) = Γ_{a→t}(f(t)) for t in U_bound, a not in t.
EvidenceReport cp_evidence(const CandidateFunction& f, const Alphabet& alphabet, std::size_t bound,
                           std::uint64_t seed = kDefaultSeed);

/// Builds the table a ↦ f(a), synthesizes T_f and checks T_f(t) = f(t) on
/// every t in U_verify_bound. Throws AlphabetTooSmall below three letters and
/// NotCP with a witness when the hypotheses or the verification fail.
Polynomial cp_to_polynomial(const CandidateFunction& f, const Alphabet& alphabet,
                            std::size_t verify_bound = kDefaultVerifyBound);

}  // namespace treealg
