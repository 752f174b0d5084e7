#include <random>
#include <string>
#include <unordered_map>

#include "treealg/affine.hpp"
#include "treealg/errors.hpp"
#include "treealg/universe.hpp"

namespace treealg {

Tree mirror(const Tree& t) {
  if (t.is_leaf()) return t;
  return star(mirror(t.right()), mirror(t.left()));
}

CandidateFunction::CandidateFunction(Kind kind, std::string name, Alphabet alphabet)
    : kind_(std::move(kind)), name_(std::move(name)), alphabet_(std::move(alphabet)) {}

CandidateFunction CandidateFunction::identity(const Alphabet& alphabet) {
  return {Identity{}, "identity", alphabet};
}

CandidateFunction CandidateFunction::mirror(const Alphabet& alphabet) { return {Mirror{}, "mirror", alphabet}; }

CandidateFunction CandidateFunction::recolor(Letter target, const Alphabet& alphabet) {
  if (!alphabet.contains(target)) throw InvalidAlphabet("recolor target is not in the alphabet", {std::string(1, target)});
  return {Recolor{target}, std::string("recolor:") + target, alphabet};
}

CandidateFunction CandidateFunction::constant(Tree value, const Alphabet& alphabet) {
  std::string name = "const:" + encode(value);
  return {Constant{std::move(value)}, std::move(name), alphabet};
}

CandidateFunction CandidateFunction::polynomial(Polynomial p, const Alphabet& alphabet) {
  std::string name = "poly:" + encode(p);
  return {PolynomialFn{std::move(p)}, std::move(name), alphabet};
}

CandidateFunction CandidateFunction::table(std::unordered_map<Tree, Tree, TreeHash> values, std::string name,
                                           const Alphabet& alphabet) {
  return {Table{std::move(values)}, std::move(name), alphabet};
}

Tree CandidateFunction::operator()(const Tree& t) const {
  return std::visit(
      [&](const auto& k) -> Tree {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Identity>) {
          return t;
        } else if constexpr (std::is_same_v<K, Mirror>) {
          return treealg::mirror(t);
        } else if constexpr (std::is_same_v<K, Recolor>) {
          return treealg::recolor(t, k.target, alphabet_);
        } else if constexpr (std::is_same_v<K, Constant>) {
          return k.value;
        } else if constexpr (std::is_same_v<K, PolynomialFn>) {
          return eval_poly(k.poly, t);
        } else {
          const auto it = k.values.find(t);
          if (it == k.values.end())
            throw EvaluationFailure("function '" + name_ + "' is undefined on a required tree", {encode(t)});
          return it->second;
        }
      },
      kind_);
}

bool EvidenceReport::all_passed() const { return first_failure() == nullptr; }

const EvidenceTest* EvidenceReport::first_failure() const {
  for (const EvidenceTest& t : tests)
    if (!t.passed) return &t;
  return nullptr;
}

namespace {

// Checks that `key(t) = key(t')` implies `image_key(f(t)) = image_key(f(t'))`
// by comparing each tree with the first tree of its key class.
template <typename Key, typename Hash, typename KeyFn, typename ImageFn>
void check_kernel(EvidenceTest& test, const std::vector<Tree>& universe, const std::vector<Tree>& images, KeyFn key,
                  ImageFn image_key, const std::optional<Grafting>& grafting) {
  std::unordered_map<Key, std::size_t, Hash> first_of;
  first_of.reserve(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const auto [it, inserted] = first_of.emplace(key(universe[i]), i);
    if (inserted) continue;
    const std::size_t j = it->second;
    ++test.checked;
    auto lhs = image_key(images[j]);
    auto rhs = image_key(images[i]);
    if (lhs != rhs) {
      test.passed = false;
      if constexpr (std::is_same_v<decltype(lhs), Tree>) {
        test.witness = EvidenceWitness{universe[j], universe[i], lhs, rhs, grafting};
      } else {
        test.witness = EvidenceWitness{universe[j], universe[i], images[j], images[i], grafting};
      }
      return;
    }
  }
}

}  // namespace

EvidenceReport cp_evidence(const CandidateFunction& f, const Alphabet& alphabet, std::size_t bound,
                           std::uint64_t seed) {
  EvidenceReport report{f.name(), bound, seed, {}};
  const std::vector<Tree> universe = enumerate_universe(alphabet, bound);
  std::vector<Tree> images;
  images.reserve(universe.size());
  for (const Tree& t : universe) images.push_back(f(t));

  EvidenceTest sk{"skeleton-kernel", "equal skeletons imply equal image skeletons", true, 0, {}};
  check_kernel<std::string, std::hash<std::string>>(
      sk, universe, images, [](const Tree& t) { return skeleton(t).word; },
      [](const Tree& t) { return skeleton(t).word; }, std::nullopt);
  report.tests.push_back(std::move(sk));

  EvidenceTest fo{"foliage-kernel", "equal foliages imply equal image foliages", true, 0, {}};
  check_kernel<std::string, std::hash<std::string>>(
      fo, universe, images, [](const Tree& t) { return foliage(t).word; },
      [](const Tree& t) { return foliage(t).word; }, std::nullopt);
  report.tests.push_back(std::move(fo));

  std::vector<Grafting> sample;
  for (const Tree& tau : enumerate_universe(alphabet, 2))
    for (Letter a : alphabet) sample.push_back(Grafting{a, tau});
  const std::vector<Tree> u4 = enumerate_universe(alphabet, 4);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < kRandomGraftings; ++i) {
    const Letter a = alphabet[rng() % alphabet.size()];
    sample.push_back(Grafting{a, u4[rng() % u4.size()]});
  }

  EvidenceTest gk{"grafting-kernels", "equal grafted trees imply equal grafted images", true, 0, {}};
  for (const Grafting& g : sample) {
    check_kernel<Tree, TreeHash>(
        gk, universe, images, [&](const Tree& t) { return graft(g, t); }, [&](const Tree& t) { return graft(g, t); },
        g);
    if (!gk.passed) break;
  }
  report.tests.push_back(std::move(gk));

  EvidenceTest ig{"idempotent-grafting", "G(f(a)) = G(f(t)) for every idempotent grafting G = a->t", true, 0, {}};
  for (std::size_t i = 0; i < universe.size() && ig.passed; ++i) {
    const Tree& t = universe[i];
    for (Letter a : alphabet) {
      const Grafting g{a, t};
      if (!is_idempotent(g)) continue;
      const Tree leaf = Tree::leaf(a);
      ++ig.checked;
      const Tree lhs = graft(g, f(leaf));
      const Tree rhs = graft(g, images[i]);
      if (lhs != rhs) {
        ig.passed = false;
        ig.witness = EvidenceWitness{leaf, t, lhs, rhs, g};
        break;
      }
    }
  }
  report.tests.push_back(std::move(ig));
  return report;
}

Polynomial cp_to_polynomial(const CandidateFunction& f, const Alphabet& alphabet, std::size_t verify_bound) {
  if (alphabet.size() < 3)
    throw AlphabetTooSmall("polynomial recovery from generator values needs at least three letters",
                           {alphabet.symbols()});
  std::vector<Tree> images;
  for (Letter a : alphabet) images.push_back(f(Tree::leaf(a)));
  const GeneratorTable table(alphabet, images);

  const HypothesisCheck check = check_hypotheses(table);
  auto reject = [&](const std::string& why, Letter a, Letter b) {
    throw NotCP("'" + f.name() + "' is not congruence preserving: " + why,
                {std::string(1, a), std::string(1, b), encode(table.at(a)), encode(table.at(b))});
  };
  if (const auto* m = std::get_if<SkeletonMismatch>(&check))
    reject("generator images have different skeletons", m->first, m->second);
  if (const auto* c = std::get_if<CompatibilityFailure>(&check))
    reject("a letter-to-letter grafting separates generator images", c->first, c->second);

  const Polynomial poly = [&] {
    try {
      return synthesize(table);
    } catch (const HypothesesViolated& e) {
      throw NotCP("'" + f.name() + "' is not congruence preserving: " + e.what(), e.witness());
    }
  }();

  for_each_tree(alphabet, verify_bound, [&](const Tree& t) {
    const Tree expected = f(t);
    const Tree got = eval_poly(poly, t);
    if (expected != got)
      throw NotCP("'" + f.name() + "' disagrees with the polynomial " + encode(poly) +
                      " synthesized from its generator values",
                  {encode(t), encode(expected), encode(got), encode(poly)});
  });
  return poly;
}

}  // namespace treealg
