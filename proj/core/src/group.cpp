#include "burnside/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace burnside {

namespace {
constexpr size_t kClosureCap = 2'000'000;
}

PermutationGroup PermutationGroup::build(int degree, std::vector<uint64_t> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const uint64_t id = packed_identity(degree);
  std::erase(gens, id);

  PermutationGroup g;
  g.degree_ = degree;
  for (uint64_t p : gens) g.generators_.emplace_back(unpack_perm(p, degree));

  g.packed_.push_back(id);
  g.words_.emplace_back(-1, -1);
  g.index_[id] = 0;

  // layer holds indices into packed_ of the previous BFS layer.
  std::vector<int> layer{0};
  while (!layer.empty()) {
    // Discover the next layer, remembering the first (parent, gen) word.
    std::vector<std::pair<uint64_t, std::pair<int, int>>> found;
    std::unordered_map<uint64_t, size_t> where;
    for (int xi : layer) {
      const uint64_t x = g.packed_[static_cast<size_t>(xi)];
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        const uint64_t y = packed_compose(x, gens[gi], degree);
        if (g.index_.count(y) || where.count(y)) continue;
        where[y] = found.size();
        found.emplace_back(y, std::make_pair(xi, static_cast<int>(gi)));
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    layer.clear();
    for (const auto& [y, word] : found) {
      const int idx = static_cast<int>(g.packed_.size());
      g.packed_.push_back(y);
      g.words_.push_back(word);
      g.index_[y] = idx;
      layer.push_back(idx);
      if (g.packed_.size() > kClosureCap) throw CapExceeded("group closure too large");
    }
  }

  g.elements_.reserve(g.packed_.size());
  for (uint64_t p : g.packed_) g.elements_.emplace_back(unpack_perm(p, degree));
  return g;
}

PermutationGroup PermutationGroup::closure(int degree, std::vector<Permutation> generators) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<uint64_t> gens;
  for (const auto& p : generators) {
    if (p.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    gens.push_back(pack_perm(p));
  }
  return build(degree, std::move(gens));
}

namespace {
std::vector<Permutation> block_generators(int degree, int start, int len) {
  std::vector<Permutation> gens;
  if (len >= 2) {
    auto im = Permutation::identity(degree).images();
    std::swap(im[static_cast<size_t>(start)], im[static_cast<size_t>(start + 1)]);
    gens.emplace_back(std::move(im));
  }
  if (len >= 3) {
    auto im = Permutation::identity(degree).images();
    for (int k = 0; k < len; ++k) im[static_cast<size_t>(start + k)] = start + (k + 1) % len;
    gens.emplace_back(std::move(im));
  }
  return gens;
}
}  // namespace

PermutationGroup PermutationGroup::symmetric(int degree) {
  return closure(degree, block_generators(degree, 0, degree));
}

PermutationGroup PermutationGroup::trivial(int degree) { return closure(degree, {}); }

PermutationGroup PermutationGroup::from_elements(int degree, std::vector<Permutation> elements) {
  std::vector<uint64_t> packed;
  for (const auto& p : elements) {
    if (p.degree() != degree) throw std::invalid_argument("element degree mismatch");
    packed.push_back(pack_perm(p));
  }
  std::sort(packed.begin(), packed.end());
  packed.erase(std::unique(packed.begin(), packed.end()), packed.end());
  if (packed.empty() || !std::binary_search(packed.begin(), packed.end(), packed_identity(degree)))
    throw std::invalid_argument("element set must contain the identity");
  for (uint64_t a : packed)
    for (uint64_t b : packed)
      if (!std::binary_search(packed.begin(), packed.end(), packed_compose(a, b, degree)))
        throw std::invalid_argument("element set is not closed under composition");

  // Greedy small generating set over the sorted list.
  std::vector<uint64_t> gens;
  PermutationGroup cur = build(degree, {});
  for (uint64_t p : packed) {
    if (cur.index_.count(p)) continue;
    gens.push_back(p);
    cur = build(degree, gens);
  }
  if (cur.order() != static_cast<int64_t>(packed.size()))
    throw std::logic_error("closure/from_elements mismatch");
  return cur;
}

bool PermutationGroup::contains(const Permutation& p) const {
  return p.degree() == degree_ && index_.count(pack_perm(p)) != 0;
}

bool PermutationGroup::contains_packed(uint64_t p) const { return index_.count(p) != 0; }

int PermutationGroup::element_index(const Permutation& p) const {
  return element_index_packed(pack_perm(p));
}

int PermutationGroup::element_index_packed(uint64_t p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& g) const {
  if (degree_ != g.degree_ || order() > g.order()) return false;
  for (uint64_t p : packed_)
    if (!g.contains_packed(p)) return false;
  return true;
}

bool PermutationGroup::same_elements(const PermutationGroup& g) const {
  return order() == g.order() && is_subgroup_of(g);
}

std::optional<Permutation> conjugating_witness(const PermutationGroup& g,
                                               const PermutationGroup& h1,
                                               const PermutationGroup& h2) {
  if (!h1.is_subgroup_of(g) || !h2.is_subgroup_of(g))
    throw std::invalid_argument("conjugacy test requires subgroups of the ambient group");
  if (h1.order() != h2.order()) return std::nullopt;
  const int deg = g.degree();
  // c gens(H1) c^-1 inside H2 forces c H1 c^-1 = H2 once the orders agree.
  std::vector<uint64_t> h1gens;
  for (const auto& p : h1.generators()) h1gens.push_back(pack_perm(p));
  if (h1gens.empty()) h1gens.push_back(packed_identity(deg));
  for (size_t ci = 0; ci < g.packed_elements().size(); ++ci) {
    const uint64_t c = g.packed_elements()[ci];
    const uint64_t cinv = packed_inverse(c, deg);
    bool ok = true;
    for (uint64_t x : h1gens) {
      if (!h2.contains_packed(packed_compose(packed_compose(c, x, deg), cinv, deg))) {
        ok = false;
        break;
      }
    }
    if (ok) return g.element(static_cast<int>(ci));
  }
  return std::nullopt;
}

bool are_conjugate(const PermutationGroup& g, const PermutationGroup& h1,
                   const PermutationGroup& h2) {
  return conjugating_witness(g, h1, h2).has_value();
}

PermutationGroup normalizer(const PermutationGroup& g, const PermutationGroup& h) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("normalizer requires a subgroup");
  const int deg = g.degree();
  std::vector<uint64_t> hgens;
  for (const auto& p : h.generators()) hgens.push_back(pack_perm(p));
  std::vector<Permutation> out;
  for (size_t ci = 0; ci < g.packed_elements().size(); ++ci) {
    const uint64_t c = g.packed_elements()[ci];
    const uint64_t cinv = packed_inverse(c, deg);
    bool ok = true;
    for (uint64_t x : hgens) {
      if (!h.contains_packed(packed_compose(packed_compose(c, x, deg), cinv, deg))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g.element(static_cast<int>(ci)));
  }
  return PermutationGroup::from_elements(deg, std::move(out));
}

PermutationGroup young_embedding(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("young_embedding needs i, j >= 0");
  std::vector<Permutation> gens;
  for (auto& p : block_generators(i + j, 0, i)) gens.push_back(std::move(p));
  for (auto& p : block_generators(i + j, i, j)) gens.push_back(std::move(p));
  return PermutationGroup::closure(i + j, std::move(gens));
}

Permutation canonical_permutation(const CycleType& t) {
  const int n = t.n();
  auto im = Permutation::identity(n).images();
  int off = 0;
  for (int len : t.parts) {
    for (int k = 0; k < len; ++k) im[static_cast<size_t>(off + k)] = off + (k + 1) % len;
    off += len;
  }
  return Permutation(std::move(im));
}

PermutationGroup cyclic_from_cycle_type(const CycleType& t) {
  return PermutationGroup::closure(t.n(), {canonical_permutation(t)});
}

}  // namespace burnside
