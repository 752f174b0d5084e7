#include "treealg/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "treealg/errors.hpp"

namespace treealg {

Universe::Universe(Alphabet alphabet, std::size_t max_leaves, std::size_t cap)
    : alphabet_(std::move(alphabet)), max_leaves_(max_leaves), trees_(enumerate_universe(alphabet_, max_leaves, cap)) {
  index_.reserve(trees_.size());
  for (std::size_t i = 0; i < trees_.size(); ++i) index_.emplace(trees_[i], static_cast<std::uint32_t>(i));
  children_.reserve(trees_.size());
  for (const Tree& t : trees_) {
    if (t.is_leaf()) {
      children_.emplace_back(kNoChild, kNoChild);
    } else {
      // children precede their parent in enumeration order, so they are indexed
      children_.emplace_back(index_.at(t.left()), index_.at(t.right()));
    }
  }
}

std::optional<std::size_t> Universe::index_of(const Tree& t) const {
  if (t.leaf_count() > max_leaves_) return std::nullopt;
  const auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::require_index(const Tree& t) const {
  if (auto i = index_of(t)) return *i;
  throw PairOutOfUniverse("tree is not in the universe of trees with at most " + std::to_string(max_leaves_) +
                              " leaves over '" + alphabet_.symbols() + "'",
                          {encode(t)});
}

TreePartition::TreePartition(std::shared_ptr<const Universe> universe, std::vector<std::uint32_t> representative)
    : universe_(std::move(universe)), representative_(std::move(representative)) {}

bool TreePartition::related(const Tree& t, const Tree& t2) const {
  const std::size_t i = universe_->require_index(t);
  const std::size_t j = universe_->require_index(t2);
  return representative_[i] == representative_[j];
}

std::vector<std::vector<std::size_t>> TreePartition::classes() const {
  // representatives are the smallest member, so a class opens at its representative
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(representative_.size(), SIZE_MAX);
  for (std::size_t i = 0; i < representative_.size(); ++i) {
    const std::size_t r = representative_[i];
    if (r == i) {
      slot[i] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

std::size_t TreePartition::class_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < representative_.size(); ++i) n += representative_[i] == i;
  return n;
}

namespace {

// Congruence closure over the universe DAG: union-find, per-class use lists
// of parent nodes, and a signature table keyed by the classes of a node's
// children. Merging two classes re-signs the parents of the smaller one;
// a signature collision queues the colliding parents for merging.
class ClosureEngine {
 public:
  explicit ClosureEngine(const Universe& u) : universe_(u), parent_(u.size()), uses_(u.size()) {
    std::iota(parent_.begin(), parent_.end(), 0u);
    signatures_.reserve(u.size());
    for (std::uint32_t n = 0; n < u.size(); ++n) {
      const auto [l, r] = u.children(n);
      if (l == Universe::kNoChild) continue;
      uses_[l].push_back(n);
      if (r != l) uses_[r].push_back(n);
      signatures_.emplace(key(l, r), n);
    }
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    pending_.emplace_back(a, b);
    while (!pending_.empty()) {
      const auto [x, y] = pending_.front();
      pending_.pop_front();
      std::uint32_t rx = find(x), ry = find(y);
      if (rx == ry) continue;
      if (uses_[rx].size() < uses_[ry].size()) std::swap(rx, ry);

      // ry is absorbed into rx
      std::vector<std::uint32_t> moved = std::move(uses_[ry]);
      uses_[ry].clear();
      for (std::uint32_t n : moved) {
        const auto it = signatures_.find(signature(n));
        if (it != signatures_.end() && it->second == n) signatures_.erase(it);
      }
      parent_[ry] = rx;
      for (std::uint32_t n : moved) {
        const auto [it, inserted] = signatures_.emplace(signature(n), n);
        if (!inserted && find(it->second) != find(n)) pending_.emplace_back(n, it->second);
        uses_[rx].push_back(n);
      }
    }
  }

  std::vector<std::uint32_t> canonical() {
    std::vector<std::uint32_t> smallest(parent_.size(), UINT32_MAX);
    for (std::uint32_t i = 0; i < parent_.size(); ++i) {
      const std::uint32_t r = find(i);
      smallest[r] = std::min(smallest[r], i);
    }
    std::vector<std::uint32_t> rep(parent_.size());
    for (std::uint32_t i = 0; i < parent_.size(); ++i) rep[i] = smallest[find(i)];
    return rep;
  }

 private:
  static std::uint64_t key(std::uint32_t l, std::uint32_t r) { return (std::uint64_t{l} << 32) | r; }

  std::uint64_t signature(std::uint32_t n) {
    const auto [l, r] = universe_.children(n);
    return key(find(l), find(r));
  }

  std::uint32_t find(std::uint32_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  const Universe& universe_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::vector<std::uint32_t>> uses_;
  std::unordered_map<std::uint64_t, std::uint32_t> signatures_;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> pending_;
};

}  // namespace

TreePartition bounded_closure(const PairSet& pairs, std::shared_ptr<const Universe> universe) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> generators;
  generators.reserve(pairs.size());
  for (const auto& [t, t2] : pairs)
    generators.emplace_back(static_cast<std::uint32_t>(universe->require_index(t)),
                            static_cast<std::uint32_t>(universe->require_index(t2)));
  ClosureEngine engine(*universe);
  for (const auto& [i, j] : generators) engine.merge(i, j);
  return TreePartition(std::move(universe), engine.canonical());
}

TreePartition bounded_closure(const PairSet& pairs, const Alphabet& alphabet, std::size_t max_leaves,
                              std::size_t cap) {
  return bounded_closure(pairs, std::make_shared<const Universe>(alphabet, max_leaves, cap));
}

PrincipalVerdict principal_related(const Tree& t, const Tree& t2, const Tree& u, const Tree& v,
                                   const Alphabet& alphabet, std::size_t max_leaves, std::size_t cap) {
  const TreePartition part = bounded_closure({{t, t2}}, alphabet, max_leaves, cap);
  return part.related(u, v) ? PrincipalVerdict::Related : PrincipalVerdict::UnknownAtBound;
}

}  // namespace treealg
