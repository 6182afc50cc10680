#include "burnside/gset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "burnside/checked.hpp"
#include "burnside/ctx.hpp"
#include "burnside/errors.hpp"
#include "burnside/rng.hpp"

namespace burnside {

namespace {

// Rows for every generator of g from a point rule for single generators.
template <typename Fn>
std::vector<std::vector<int>> make_rows(const PermutationGroup& g, int64_t size, Fn&& point_map) {
  std::vector<std::vector<int>> rows;
  rows.reserve(g.generators().size());
  for (size_t k = 0; k < g.generators().size(); ++k) {
    std::vector<int> row(static_cast<size_t>(size));
    for (int64_t p = 0; p < size; ++p)
      row[static_cast<size_t>(p)] = point_map(g.generators()[k], static_cast<int>(p));
    rows.push_back(std::move(row));
  }
  return rows;
}

void check_points_cap(int64_t size, const Caps& caps, const char* what) {
  if (size > caps.max_gset_points)
    throw CapExceeded(std::string(what) + ": point count exceeds cap");
}

struct CosetSpace {
  std::vector<uint64_t> reps;     // packed, ascending (= ascending least member)
  std::vector<int> coset_of_idx;  // ambient element index -> coset id
};

// Cosets x*H of h in g, ordered by lexicographically smallest member.
CosetSpace coset_space(const PermutationGroup& g, const PermutationGroup& h) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("coset space requires a subgroup");
  const int deg = g.degree();
  const auto& gp = g.packed_elements();
  std::vector<uint64_t> reps;
  std::vector<int> coset_of(gp.size(), -1);
  for (size_t gi = 0; gi < gp.size(); ++gi) {
    if (coset_of[gi] >= 0) continue;
    uint64_t least = ~0ull;
    std::vector<size_t> members;
    for (uint64_t x : h.packed_elements()) {
      const uint64_t m = packed_compose(gp[gi], x, deg);
      const int mi = g.element_index_packed(m);
      members.push_back(static_cast<size_t>(mi));
      least = std::min(least, m);
    }
    const int provisional = static_cast<int>(reps.size());
    reps.push_back(least);
    for (size_t mi : members) coset_of[mi] = provisional;
  }
  // Renumber so coset ids follow ascending representative order.
  std::vector<int> order(reps.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return reps[a] < reps[b]; });
  std::vector<int> rank(reps.size());
  std::vector<uint64_t> sorted_reps(reps.size());
  for (size_t i = 0; i < order.size(); ++i) {
    rank[static_cast<size_t>(order[i])] = static_cast<int>(i);
    sorted_reps[i] = reps[static_cast<size_t>(order[i])];
  }
  for (auto& c : coset_of) c = rank[static_cast<size_t>(c)];
  return CosetSpace{std::move(sorted_reps), std::move(coset_of)};
}

}  // namespace

GSet::GSet(GroupPtr group, int64_t size, std::vector<std::vector<int>> generator_rows,
           std::string name, const Caps& caps)
    : group_(std::move(group)), size_(size), rows_(std::move(generator_rows)),
      name_(std::move(name)) {
  if (!group_) throw std::invalid_argument("GSet requires a group");
  if (size_ < 0) throw std::invalid_argument("GSet size must be nonnegative");
  check_points_cap(size_, caps, name_.c_str());
  if (rows_.size() != group_->generators().size())
    throw std::invalid_argument("action table inconsistent: one row per generator required");
  std::vector<char> seen(static_cast<size_t>(size_));
  for (const auto& row : rows_) {
    if (static_cast<int64_t>(row.size()) != size_)
      throw std::invalid_argument("action table inconsistent: row size mismatch");
    std::fill(seen.begin(), seen.end(), 0);
    for (int v : row) {
      if (v < 0 || v >= size_ || seen[static_cast<size_t>(v)])
        throw std::invalid_argument("action table inconsistent: row is not a bijection");
      seen[static_cast<size_t>(v)] = 1;
    }
  }

  std::vector<char> visited(static_cast<size_t>(size_), 0);
  std::vector<int> queue;
  for (int p = 0; p < size_; ++p) {
    if (visited[static_cast<size_t>(p)]) continue;
    visited[static_cast<size_t>(p)] = 1;
    queue.assign(1, p);
    int64_t count = 0;
    while (!queue.empty()) {
      const int x = queue.back();
      queue.pop_back();
      ++count;
      for (const auto& row : rows_) {
        const int y = row[static_cast<size_t>(x)];
        if (!visited[static_cast<size_t>(y)]) {
          visited[static_cast<size_t>(y)] = 1;
          queue.push_back(y);
        }
      }
    }
    orbits_.push_back(Orbit{p, count});
  }
}

int GSet::apply_perm(const Permutation& p, int point) const {
  const int idx = group_->element_index(p);
  if (idx < 0) throw std::invalid_argument("permutation is not in the acting group");
  return apply(idx, point);
}

int64_t GSet::fixed_count(int element_index) const {
  int64_t n = 0;
  for (int p = 0; p < size_; ++p)
    if (apply(element_index, p) == p) ++n;
  return n;
}

int64_t GSet::fixed_by(const PermutationGroup& h) const {
  if (!h.is_subgroup_of(*group_)) throw std::invalid_argument("fixed_by requires a subgroup");
  std::vector<int> gens;
  for (const auto& g : h.generators()) gens.push_back(group_->element_index(g));
  int64_t n = 0;
  for (int p = 0; p < size_; ++p) {
    bool fixed = true;
    for (int gi : gens) {
      if (apply(gi, p) != p) {
        fixed = false;
        break;
      }
    }
    if (fixed) ++n;
  }
  return n;
}

PermutationGroup GSet::stabilizer(int point) const {
  std::vector<Permutation> elems;
  for (int64_t i = 0; i < group_->order(); ++i)
    if (apply(static_cast<int>(i), point) == point)
      elems.push_back(group_->element(static_cast<int>(i)));
  return PermutationGroup::from_elements(group_->degree(), std::move(elems));
}

bool GSet::validate(int samples, uint64_t seed) const {
  if (size_ == 0 || group_->order() == 0) return true;
  Rng rng(seed);
  for (int k = 0; k < samples; ++k) {
    const int i = static_cast<int>(rng.range(0, group_->order() - 1));
    const int j = static_cast<int>(rng.range(0, group_->order() - 1));
    const int x = static_cast<int>(rng.range(0, size_ - 1));
    const Permutation ij = group_->element(i) * group_->element(j);
    if (apply(i, apply(j, x)) != apply(group_->element_index(ij), x)) return false;
  }
  return true;
}

GSet natural_gset(const GroupPtr& g, const Caps& caps) {
  auto rows = make_rows(*g, g->degree(), [](const Permutation& p, int x) { return p(x); });
  return GSet(g, g->degree(), std::move(rows), "natural", caps);
}

GSet trivial_gset(const GroupPtr& g, int64_t points, const Caps& caps) {
  auto rows = make_rows(*g, points, [](const Permutation&, int x) { return x; });
  return GSet(g, points, std::move(rows), "trivial(" + std::to_string(points) + ")", caps);
}

GSet empty_gset(const GroupPtr& g, const Caps& caps) { return trivial_gset(g, 0, caps); }

GSet point_gset(const GroupPtr& g, const Caps& caps) { return trivial_gset(g, 1, caps); }

GSet coset_gset(const GroupPtr& g, const PermutationGroup& h, const Caps& caps) {
  const CosetSpace cs = coset_space(*g, h);
  const int deg = g->degree();
  auto rows = make_rows(*g, static_cast<int64_t>(cs.reps.size()), [&](const Permutation& p, int c) {
    const uint64_t moved = packed_compose(pack_perm(p), cs.reps[static_cast<size_t>(c)], deg);
    return cs.coset_of_idx[static_cast<size_t>(g->element_index_packed(moved))];
  });
  return GSet(g, static_cast<int64_t>(cs.reps.size()), std::move(rows),
              "cosets(order " + std::to_string(h.order()) + ")", caps);
}

GSet regular_gset(const GroupPtr& g, const Caps& caps) {
  return coset_gset(g, PermutationGroup::trivial(g->degree()), caps);
}

GSet restrict_gset(const GSet& s, const GroupPtr& h) {
  if (!h->is_subgroup_of(s.group()))
    throw std::invalid_argument("restrict_gset requires a subgroup");
  std::vector<int> gen_idx;
  for (const auto& p : h->generators()) gen_idx.push_back(s.group().element_index(p));
  std::vector<std::vector<int>> rows;
  for (int gi : gen_idx) {
    std::vector<int> row(static_cast<size_t>(s.size()));
    for (int64_t p = 0; p < s.size(); ++p)
      row[static_cast<size_t>(p)] = s.apply(gi, static_cast<int>(p));
    rows.push_back(std::move(row));
  }
  Caps caps;
  caps.max_gset_points = s.size();
  return GSet(h, s.size(), std::move(rows), "restrict(" + s.name() + ")", caps);
}

GSet product_gset(const GSet& a, const GSet& b, const Caps& caps) {
  if (a.group_ptr().get() != b.group_ptr().get() && !a.group().same_elements(b.group()))
    throw std::invalid_argument("product_gset requires a common group");
  const int64_t size = checked_mul(a.size(), b.size());
  check_points_cap(size, caps, "product");
  const int nb = static_cast<int>(b.size());
  std::vector<std::vector<int>> rows;
  for (size_t k = 0; k < a.group().generators().size(); ++k) {
    std::vector<int> row(static_cast<size_t>(size));
    for (int pa = 0; pa < a.size(); ++pa)
      for (int pb = 0; pb < nb; ++pb)
        row[static_cast<size_t>(pa) * nb + pb] =
            a.apply_gen(static_cast<int>(k), pa) * nb + b.apply_gen(static_cast<int>(k), pb);
    rows.push_back(std::move(row));
  }
  return GSet(a.group_ptr(), size, std::move(rows),
              "product(" + a.name() + ", " + b.name() + ")", caps);
}

GSet disjoint_union_gset(const GSet& a, const GSet& b, const Caps& caps) {
  if (a.group_ptr().get() != b.group_ptr().get() && !a.group().same_elements(b.group()))
    throw std::invalid_argument("disjoint_union_gset requires a common group");
  const int64_t size = checked_add(a.size(), b.size());
  check_points_cap(size, caps, "disjoint_union");
  const int na = static_cast<int>(a.size());
  std::vector<std::vector<int>> rows;
  for (size_t k = 0; k < a.group().generators().size(); ++k) {
    std::vector<int> row(static_cast<size_t>(size));
    for (int p = 0; p < na; ++p) row[static_cast<size_t>(p)] = a.apply_gen(static_cast<int>(k), p);
    for (int p = 0; p < b.size(); ++p)
      row[static_cast<size_t>(na + p)] = na + b.apply_gen(static_cast<int>(k), p);
    rows.push_back(std::move(row));
  }
  return GSet(a.group_ptr(), size, std::move(rows), "union(" + a.name() + ", " + b.name() + ")",
              caps);
}

GSet subsets_gset(const GSet& s, int k, const Caps& caps) {
  if (s.size() > 63) throw CapExceeded("subsets_gset: base set larger than 63 points");
  if (k < 0) throw std::invalid_argument("subsets_gset: negative subset size");
  const int n = static_cast<int>(s.size());
  std::vector<uint64_t> masks;
  for (uint64_t m = 0; m < (1ull << n); ++m)
    if (std::popcount(m) == k) masks.push_back(m);
  check_points_cap(static_cast<int64_t>(masks.size()), caps, "subsets");
  auto image_index = [&](int gen, uint64_t m) {
    uint64_t out = 0;
    for (int b = 0; b < n; ++b)
      if (m & (1ull << b)) out |= 1ull << s.apply_gen(gen, b);
    const auto it = std::lower_bound(masks.begin(), masks.end(), out);
    return static_cast<int>(it - masks.begin());
  };
  std::vector<std::vector<int>> rows;
  for (size_t g = 0; g < s.group().generators().size(); ++g) {
    std::vector<int> row(masks.size());
    for (size_t p = 0; p < masks.size(); ++p) row[p] = image_index(static_cast<int>(g), masks[p]);
    rows.push_back(std::move(row));
  }
  return GSet(s.group_ptr(), static_cast<int64_t>(masks.size()), std::move(rows),
              "subsets(" + s.name() + ", " + std::to_string(k) + ")", caps);
}

GSet adjoin_fixed_point(const GSet& s, const Caps& caps) {
  const int64_t size = checked_add(s.size(), 1);
  check_points_cap(size, caps, "adjoin_fixed_point");
  const int fixed = static_cast<int>(s.size());
  std::vector<std::vector<int>> rows;
  for (size_t k = 0; k < s.group().generators().size(); ++k) {
    std::vector<int> row(static_cast<size_t>(size));
    for (int p = 0; p < fixed; ++p) row[static_cast<size_t>(p)] = s.apply_gen(static_cast<int>(k), p);
    row[static_cast<size_t>(fixed)] = fixed;
    rows.push_back(std::move(row));
  }
  return GSet(s.group_ptr(), size, std::move(rows), s.name() + "+", caps);
}

GSet block_points_gset(const GroupPtr& g, int start, int len, const Caps& caps) {
  if (start < 0 || len < 0 || start + len > g->degree())
    throw std::invalid_argument("block_points_gset: range outside the degree");
  std::vector<std::vector<int>> rows;
  rows.reserve(g->generators().size());
  for (const Permutation& gen : g->generators()) {
    std::vector<int> row(static_cast<size_t>(len));
    for (int x = 0; x < len; ++x) {
      const int image = gen(start + x);
      if (image < start || image >= start + len)
        throw std::invalid_argument("block_points_gset: generator leaves the range");
      row[static_cast<size_t>(x)] = image - start;
    }
    rows.push_back(std::move(row));
  }
  return GSet(g, len, std::move(rows),
              "block[" + std::to_string(start) + "," + std::to_string(start + len) + ")",
              caps);
}

GSet induce_gset(const GroupPtr& g, const GSet& s, const Caps& caps) {
  const PermutationGroup& h = s.group();
  const CosetSpace cs = coset_space(*g, h);
  const int deg = g->degree();
  const int64_t ncos = static_cast<int64_t>(cs.reps.size());
  const int64_t size = checked_mul(ncos, s.size());
  check_points_cap(size, caps, "induce");
  const int ns = static_cast<int>(s.size());

  std::vector<std::vector<int>> rows;
  for (const auto& gen : g->generators()) {
    const uint64_t pg = pack_perm(gen);
    std::vector<int> row(static_cast<size_t>(size));
    for (int64_t c = 0; c < ncos; ++c) {
      const uint64_t moved = packed_compose(pg, cs.reps[static_cast<size_t>(c)], deg);
      const int c2 = cs.coset_of_idx[static_cast<size_t>(g->element_index_packed(moved))];
      const uint64_t hh =
          packed_compose(packed_inverse(cs.reps[static_cast<size_t>(c2)], deg), moved, deg);
      const int h_idx = h.element_index_packed(hh);
      if (h_idx < 0) throw std::logic_error("coset translation left the subgroup");
      for (int x = 0; x < ns; ++x)
        row[static_cast<size_t>(c) * ns + x] =
            c2 * ns + s.apply(h_idx, x);
    }
    rows.push_back(std::move(row));
  }
  return GSet(g, size, std::move(rows), "induced(" + s.name() + ")", caps);
}

GSet power_gset(Ctx& ctx, const GSet& s, int i) {
  if (i < 0) throw std::invalid_argument("power_gset: negative exponent");
  const int d = s.group().degree();
  if (d + i > 16) throw CapExceeded("power_gset: combined degree above 16");

  std::vector<Permutation> gens;
  for (const auto& p : s.group().generators()) {
    std::vector<int> img(static_cast<size_t>(d + i));
    for (int x = 0; x < d; ++x) img[static_cast<size_t>(x)] = p(x);
    for (int x = d; x < d + i; ++x) img[static_cast<size_t>(x)] = x;
    gens.emplace_back(std::move(img));
  }
  auto shifted = [&](std::vector<int> block) {
    std::vector<int> img(static_cast<size_t>(d + i));
    for (int x = 0; x < d; ++x) img[static_cast<size_t>(x)] = x;
    for (int x = 0; x < i; ++x) img[static_cast<size_t>(d + x)] = d + block[static_cast<size_t>(x)];
    return Permutation(std::move(img));
  };
  if (i >= 2) {
    std::vector<int> t(static_cast<size_t>(i));
    for (int x = 0; x < i; ++x) t[static_cast<size_t>(x)] = x;
    std::swap(t[0], t[1]);
    gens.push_back(shifted(std::move(t)));
  }
  if (i >= 3) {
    std::vector<int> c(static_cast<size_t>(i));
    for (int x = 0; x < i; ++x) c[static_cast<size_t>(x)] = (x + 1) % i;
    gens.push_back(shifted(std::move(c)));
  }
  GroupPtr pg = ctx.intern(PermutationGroup::closure(d + i, std::move(gens)));

  const int64_t size = s.size() == 0 && i == 0 ? 1 : checked_pow(s.size(), i);
  check_points_cap(size, ctx.caps(), "power");
  const int64_t base = s.size();

  std::vector<std::vector<int>> rows;
  for (const auto& w : pg->generators()) {
    std::vector<int> gimg(static_cast<size_t>(std::max(d, 0)));
    for (int x = 0; x < d; ++x) {
      if (w(x) >= d) throw std::logic_error("power group generator does not preserve blocks");
      gimg[static_cast<size_t>(x)] = w(x);
    }
    const int g_idx = s.group().element_index(Permutation(gimg));
    if (g_idx < 0) throw std::logic_error("power group block factor outside base group");
    std::vector<int> sig_inv(static_cast<size_t>(i));
    for (int x = 0; x < i; ++x) {
      const int y = w(d + x) - d;
      if (y < 0 || y >= i) throw std::logic_error("power group generator does not preserve blocks");
      sig_inv[static_cast<size_t>(y)] = x;
    }

    std::vector<int> row(static_cast<size_t>(size));
    std::vector<int64_t> digits(static_cast<size_t>(i));
    for (int64_t f = 0; f < size; ++f) {
      int64_t rest = f;
      for (int pos = i - 1; pos >= 0; --pos) {
        digits[static_cast<size_t>(pos)] = rest % base;
        rest /= base;
      }
      int64_t out = 0;
      for (int pos = 0; pos < i; ++pos) {
        const int64_t src = digits[static_cast<size_t>(sig_inv[static_cast<size_t>(pos)])];
        out = out * base + s.apply(g_idx, static_cast<int>(src));
      }
      row[static_cast<size_t>(f)] = static_cast<int>(out);
    }
    rows.push_back(std::move(row));
  }
  return GSet(pg, size, std::move(rows),
              "power(" + s.name() + ", " + std::to_string(i) + ")", ctx.caps());
}

}  // namespace burnside
