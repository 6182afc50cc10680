#include "burnside/poset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "burnside/checked.hpp"
#include "burnside/ctx.hpp"
#include "burnside/errors.hpp"

namespace burnside {

namespace {

int64_t pow3(int n) {
  int64_t r = 1;
  for (int k = 0; k < n; ++k) r *= 3;
  return r;
}

}  // namespace

GPoset::GPoset(GSet carrier, const std::function<bool(int, int)>& strict_less)
    : carrier_(std::move(carrier)) {
  const int64_t n64 = carrier_.size();
  if (n64 > (1 << 28)) throw CapExceeded("poset too large");
  const int n = static_cast<int>(n64);
  words_ = (static_cast<size_t>(n) + 63) / 64;
  bits_.assign(static_cast<size_t>(n) * words_, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && strict_less(i, j))
        bits_[static_cast<size_t>(i) * words_ + static_cast<size_t>(j) / 64] |=
            1ull << (static_cast<size_t>(j) % 64);

  above_.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (strict_less(i, i)) throw std::invalid_argument("poset relation is not irreflexive");
    for (int j = 0; j < n; ++j)
      if (less(i, j)) above_[static_cast<size_t>(i)].push_back(j);
  }
  for (int i = 0; i < n; ++i) {
    const uint64_t* row_i = &bits_[static_cast<size_t>(i) * words_];
    for (int j : above_[static_cast<size_t>(i)]) {
      if (less(j, i)) throw std::invalid_argument("poset relation is not antisymmetric");
      const uint64_t* row_j = &bits_[static_cast<size_t>(j) * words_];
      for (size_t w = 0; w < words_; ++w)
        if (row_j[w] & ~row_i[w])
          throw std::invalid_argument("poset relation is not transitive");
    }
  }
  const int gens = static_cast<int>(carrier_.group().generators().size());
  for (int g = 0; g < gens; ++g)
    for (int i = 0; i < n; ++i)
      for (int j : above_[static_cast<size_t>(i)])
        if (!less(carrier_.apply_gen(g, i), carrier_.apply_gen(g, j)))
          throw std::invalid_argument("group action does not preserve the order");
}

std::vector<std::pair<int, int>> GPoset::cover_relations() const {
  std::vector<std::pair<int, int>> covers;
  const int n = static_cast<int>(size());
  for (int i = 0; i < n; ++i) {
    for (int j : above(i)) {
      bool is_cover = true;
      for (int k : above(i)) {
        if (k != j && less(k, j)) {
          is_cover = false;
          break;
        }
      }
      if (is_cover) covers.emplace_back(i, j);
    }
  }
  return covers;
}

GSet chain_tuples(const GPoset& p, int j, const Caps& caps) {
  if (j < 0) throw std::invalid_argument("chain_tuples: negative chain index");
  const int n = static_cast<int>(p.size());
  const int tuple_len = j + 1;
  std::vector<int32_t> flat;
  std::vector<int32_t> cur(static_cast<size_t>(tuple_len));
  int64_t count = 0;

  // Depth-first emission: first entries ascend, extensions walk above() lists
  // (which ascend), so tuples come out in lexicographic order.
  std::function<void(int)> extend = [&](int depth) {
    if (depth == tuple_len) {
      if (count + 1 > caps.max_gset_points)
        throw CapExceeded("chain_tuples: more than " + std::to_string(caps.max_gset_points) +
                          " chains");
      ++count;
      flat.insert(flat.end(), cur.begin(), cur.end());
      return;
    }
    if (depth == 0) {
      for (int x = 0; x < n; ++x) {
        cur[0] = x;
        extend(1);
      }
      return;
    }
    for (int x : p.above(cur[static_cast<size_t>(depth - 1)])) {
      cur[static_cast<size_t>(depth)] = x;
      extend(depth + 1);
    }
  };
  extend(0);

  auto find_tuple = [&](const std::vector<int32_t>& key) -> int64_t {
    int64_t lo = 0, hi = count;
    while (lo < hi) {
      const int64_t mid = lo + (hi - lo) / 2;
      const int32_t* t = &flat[static_cast<size_t>(mid) * tuple_len];
      bool mid_less = false;
      for (int k = 0; k < tuple_len; ++k) {
        if (t[k] != key[static_cast<size_t>(k)]) {
          mid_less = t[k] < key[static_cast<size_t>(k)];
          break;
        }
      }
      if (mid_less)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo == count) throw std::logic_error("chain_tuples: image tuple not found");
    const int32_t* t = &flat[static_cast<size_t>(lo) * tuple_len];
    for (int k = 0; k < tuple_len; ++k)
      if (t[k] != key[static_cast<size_t>(k)])
        throw std::logic_error("chain_tuples: image tuple not found");
    return lo;
  };

  const auto& gens = p.carrier().group().generators();
  std::vector<std::vector<int>> rows(gens.size(), std::vector<int>(static_cast<size_t>(count)));
  std::vector<int32_t> image(static_cast<size_t>(tuple_len));
  for (size_t g = 0; g < gens.size(); ++g) {
    for (int64_t t = 0; t < count; ++t) {
      const int32_t* src = &flat[static_cast<size_t>(t) * tuple_len];
      for (int k = 0; k < tuple_len; ++k)
        image[static_cast<size_t>(k)] =
            p.carrier().apply_gen(static_cast<int>(g), src[k]);
      rows[g][static_cast<size_t>(t)] = static_cast<int>(find_tuple(image));
    }
  }
  return GSet(p.carrier().group_ptr(), count, std::move(rows),
              p.carrier().name() + ".chains(" + std::to_string(j) + ")", caps);
}

BurnsideElement lefschetz_invariant(Ctx& ctx, const GPoset& p) {
  BurnsideElement total = BurnsideElement::zero(ctx.table(p.carrier().group_ptr()));
  for (int j = 0;; ++j) {
    GSet chains = chain_tuples(p, j, ctx.caps());
    if (chains.size() == 0) break;
    const BurnsideElement term = from_gset(ctx, chains);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

BurnsideElement reduced_lefschetz(Ctx& ctx, const GPoset& p) {
  return lefschetz_invariant(ctx, p) - BurnsideElement::one(ctx.table(p.carrier().group_ptr()));
}

std::vector<uint64_t> bounded_subset_masks(int64_t base_size, int max_size) {
  if (base_size < 0 || base_size > 63)
    throw std::invalid_argument("bounded_subset_masks: base size must be in [0, 63]");
  std::vector<uint64_t> masks;
  if (max_size <= 0 || base_size == 0) return masks;
  const uint64_t limit = base_size == 63 ? ~0ull : (1ull << base_size) - 1;
  for (uint64_t m = 1;; ++m) {
    if (std::popcount(m) <= max_size) masks.push_back(m);
    if (m == limit) break;
  }
  return masks;
}

GPoset bounded_subset_poset(const GSet& s, int max_size, const Caps& caps) {
  // max_size <= 0 gives the empty poset.
  std::vector<uint64_t> masks = bounded_subset_masks(s.size(), max_size);
  const int64_t count = static_cast<int64_t>(masks.size());
  if (count > caps.max_gset_points) throw CapExceeded("bounded_subset_poset: too many subsets");

  auto index_of = [&](uint64_t m) {
    const auto it = std::lower_bound(masks.begin(), masks.end(), m);
    if (it == masks.end() || *it != m)
      throw std::logic_error("bounded_subset_poset: image mask not found");
    return static_cast<int>(it - masks.begin());
  };
  const auto& gens = s.group().generators();
  std::vector<std::vector<int>> rows(gens.size(), std::vector<int>(static_cast<size_t>(count)));
  for (size_t g = 0; g < gens.size(); ++g) {
    for (int64_t i = 0; i < count; ++i) {
      uint64_t image = 0;
      for (int x = 0; x < static_cast<int>(s.size()); ++x)
        if ((masks[static_cast<size_t>(i)] >> x) & 1)
          image |= 1ull << s.apply_gen(static_cast<int>(g), x);
      rows[g][static_cast<size_t>(i)] = index_of(image);
    }
  }
  GSet carrier(s.group_ptr(), count, std::move(rows),
               s.name() + ".subsets<=" + std::to_string(max_size), caps);
  auto shared = std::make_shared<std::vector<uint64_t>>(std::move(masks));
  return GPoset(std::move(carrier), [shared](int i, int j) {
    const uint64_t a = (*shared)[static_cast<size_t>(i)];
    const uint64_t b = (*shared)[static_cast<size_t>(j)];
    return a != b && (a & ~b) == 0;
  });
}

std::vector<std::pair<uint64_t, uint64_t>> subset_flag_pairs(int64_t base_size, int inner_max,
                                                             int outer_size) {
  if (base_size < 0 || base_size > 63)
    throw std::invalid_argument("subset_flag_pairs: base size must be in [0, 63]");
  if (outer_size < 0 || outer_size > base_size)
    throw std::invalid_argument("subset_flag_pairs: outer size out of range");
  std::vector<std::pair<uint64_t, uint64_t>> pairs;
  if (inner_max <= 0 || outer_size == 0) return pairs;  // inner bound <= 0: empty
  const uint64_t limit = base_size == 63 ? ~0ull : (1ull << base_size) - 1;
  for (uint64_t v = 1;; ++v) {
    if (std::popcount(v) == outer_size) {
      std::vector<uint64_t> subs;
      for (uint64_t u = v;; u = (u - 1) & v) {
        if (u != 0 && std::popcount(u) <= inner_max) subs.push_back(u);
        if (u == 0) break;
      }
      std::sort(subs.begin(), subs.end());
      for (uint64_t u : subs) pairs.emplace_back(v, u);
    }
    if (v == limit) break;
  }
  return pairs;
}

GPoset subset_flag_poset(const GSet& s, int inner_max, int outer_size, const Caps& caps) {
  std::vector<std::pair<uint64_t, uint64_t>> pairs =
      subset_flag_pairs(s.size(), inner_max, outer_size);
  const int64_t count = static_cast<int64_t>(pairs.size());
  if (count > caps.max_gset_points) throw CapExceeded("subset_flag_poset: too many pairs");

  auto index_of = [&](const std::pair<uint64_t, uint64_t>& key) {
    const auto it = std::lower_bound(pairs.begin(), pairs.end(), key);
    if (it == pairs.end() || *it != key)
      throw std::logic_error("subset_flag_poset: image pair not found");
    return static_cast<int>(it - pairs.begin());
  };
  auto mask_image = [&](uint64_t m, int g) {
    uint64_t image = 0;
    for (int x = 0; x < static_cast<int>(s.size()); ++x)
      if ((m >> x) & 1) image |= 1ull << s.apply_gen(g, x);
    return image;
  };
  const auto& gens = s.group().generators();
  std::vector<std::vector<int>> rows(gens.size(), std::vector<int>(static_cast<size_t>(count)));
  for (size_t g = 0; g < gens.size(); ++g)
    for (int64_t i = 0; i < count; ++i)
      rows[g][static_cast<size_t>(i)] =
          index_of({mask_image(pairs[static_cast<size_t>(i)].first, static_cast<int>(g)),
                    mask_image(pairs[static_cast<size_t>(i)].second, static_cast<int>(g))});
  GSet carrier(s.group_ptr(), count, std::move(rows),
               s.name() + ".flags(" + std::to_string(inner_max) + "," +
                   std::to_string(outer_size) + ")",
               caps);
  auto shared = std::make_shared<std::vector<std::pair<uint64_t, uint64_t>>>(std::move(pairs));
  return GPoset(std::move(carrier), [shared](int i, int j) {
    const auto& a = (*shared)[static_cast<size_t>(i)];
    const auto& b = (*shared)[static_cast<size_t>(j)];
    return a.first == b.first && a.second != b.second && (a.second & ~b.second) == 0;
  });
}

GPoset two_label_poset(Ctx& ctx, int n) {
  if (n < 0) throw std::invalid_argument("two_label_poset: negative arity");
  if (n > ctx.caps().max_torus_n)
    throw CapExceeded("two_label_poset: arity exceeds cap " +
                      std::to_string(ctx.caps().max_torus_n));
  const int64_t count = pow3(n) - 1;  // all labelings except the constant top
  if (count > ctx.caps().max_gset_points) throw CapExceeded("two_label_poset: too many points");
  GroupPtr g = ctx.symmetric(n);

  auto digits_of = [n](int64_t code) {
    std::vector<int> d(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
      d[static_cast<size_t>(x)] = static_cast<int>(code % 3);
      code /= 3;
    }
    return d;
  };
  const auto& gens = g->generators();
  std::vector<std::vector<int>> rows(gens.size(), std::vector<int>(static_cast<size_t>(count)));
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    const Permutation inv = gens[gi].inverse();
    for (int64_t code = 0; code < count; ++code) {
      const std::vector<int> d = digits_of(code);
      int64_t out = 0;
      for (int x = 0; x < n; ++x)
        out += static_cast<int64_t>(d[static_cast<size_t>(inv(x))]) * pow3(x);
      rows[gi][static_cast<size_t>(code)] = static_cast<int>(out);
    }
  }
  GSet carrier(g, count, std::move(rows), "two_label(" + std::to_string(n) + ")",
               ctx.caps());
  return GPoset(std::move(carrier), [n, digits_of](int i, int j) {
    const std::vector<int> a = digits_of(i);
    const std::vector<int> b = digits_of(j);
    bool strict = false;
    for (int x = 0; x < n; ++x) {
      const int da = a[static_cast<size_t>(x)], db = b[static_cast<size_t>(x)];
      if (da == db) continue;
      if (db == 2)
        strict = true;  // a < top and b < top
      else
        return false;  // a and b are incomparable labels
    }
    return strict;
  });
}

GPoset opposite(const GPoset& p) {
  return GPoset(p.carrier(), [&p](int i, int j) { return p.less(j, i); });
}

GPoset induce_poset(const GroupPtr& g, const GPoset& p, const Caps& caps) {
  GSet carrier = induce_gset(g, p.carrier(), caps);
  const int64_t block = p.size();
  return GPoset(std::move(carrier), [&p, block](int i, int j) {
    return i / block == j / block &&
           p.less(static_cast<int>(i % block), static_cast<int>(j % block));
  });
}

namespace {

std::vector<uint64_t> sorted_stabilizer_elements(const GSet& s, int point) {
  const PermutationGroup& g = s.group();
  std::vector<uint64_t> elems;
  for (int64_t e = 0; e < g.order(); ++e)
    if (s.apply(static_cast<int>(e), point) == point)
      elems.push_back(g.packed_elements()[static_cast<size_t>(e)]);
  std::sort(elems.begin(), elems.end());
  return elems;
}

struct PointInvariant {
  int64_t below = 0;
  int64_t above = 0;
  bool operator==(const PointInvariant&) const = default;
};

PointInvariant invariant_of(const GPoset& p, int x) {
  PointInvariant inv;
  inv.above = static_cast<int64_t>(p.above(x).size());
  for (int64_t i = 0; i < p.size(); ++i)
    if (p.less(static_cast<int>(i), x)) ++inv.below;
  return inv;
}

}  // namespace

std::optional<std::vector<int>> equivariant_poset_iso(const GPoset& p, const GPoset& q) {
  const GSet& sp = p.carrier();
  const GSet& sq = q.carrier();
  if (sp.group_ptr() != sq.group_ptr() && !sp.group().same_elements(sq.group()))
    throw std::invalid_argument("equivariant_poset_iso: posets over different groups");
  if (sp.size() != sq.size()) return std::nullopt;
  if (sp.orbits().size() != sq.orbits().size()) return std::nullopt;
  const int n = static_cast<int>(sp.size());
  const int64_t group_order = sp.group().order();

  std::vector<int> map(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::vector<char> q_orbit_used(sq.orbits().size(), 0);
  std::vector<int> q_orbit_of(static_cast<size_t>(n), -1);
  for (size_t o = 0; o < sq.orbits().size(); ++o) {
    const int rep = sq.orbits()[o].representative;
    for (int64_t e = 0; e < group_order; ++e)
      q_orbit_of[static_cast<size_t>(sq.apply(static_cast<int>(e), rep))] = static_cast<int>(o);
  }

  std::vector<int> mapped_points;  // in assignment order, for incremental order checks

  std::function<bool(size_t)> assign = [&](size_t oi) -> bool {
    if (oi == sp.orbits().size()) return true;
    const int rep = sp.orbits()[oi].representative;
    const std::vector<uint64_t> rep_stab = sorted_stabilizer_elements(sp, rep);
    const PointInvariant rep_inv = invariant_of(p, rep);
    for (size_t qo = 0; qo < sq.orbits().size(); ++qo) {
      if (q_orbit_used[qo]) continue;
      if (sq.orbits()[qo].size != sp.orbits()[oi].size) continue;
      for (int cand = 0; cand < n; ++cand) {
        if (q_orbit_of[static_cast<size_t>(cand)] != static_cast<int>(qo)) continue;
        if (used[static_cast<size_t>(cand)]) continue;
        if (invariant_of(q, cand) != rep_inv) continue;
        if (sorted_stabilizer_elements(sq, cand) != rep_stab) continue;

        // Propagate over the whole orbit; stabilizer equality makes the
        // assignment well defined, checked again below for safety.
        bool consistent = true;
        std::vector<int> newly;
        for (int64_t e = 0; e < group_order && consistent; ++e) {
          const int src = sp.apply(static_cast<int>(e), rep);
          const int dst = sq.apply(static_cast<int>(e), cand);
          if (map[static_cast<size_t>(src)] == -1) {
            map[static_cast<size_t>(src)] = dst;
            used[static_cast<size_t>(dst)] = 1;
            newly.push_back(src);
          } else if (map[static_cast<size_t>(src)] != dst) {
            consistent = false;
          }
        }
        if (consistent) {
          for (int a : newly) {
            for (int b : mapped_points) {
              if (p.less(a, b) != q.less(map[static_cast<size_t>(a)],
                                         map[static_cast<size_t>(b)]) ||
                  p.less(b, a) != q.less(map[static_cast<size_t>(b)],
                                         map[static_cast<size_t>(a)])) {
                consistent = false;
                break;
              }
            }
            if (!consistent) break;
          }
          if (consistent) {
            for (size_t a = 0; a < newly.size() && consistent; ++a)
              for (size_t b = a + 1; b < newly.size() && consistent; ++b) {
                const int x = newly[a], y = newly[b];
                if (p.less(x, y) != q.less(map[static_cast<size_t>(x)],
                                           map[static_cast<size_t>(y)]) ||
                    p.less(y, x) != q.less(map[static_cast<size_t>(y)],
                                           map[static_cast<size_t>(x)]))
                  consistent = false;
              }
          }
        }
        if (consistent) {
          q_orbit_used[qo] = 1;
          const size_t mark = mapped_points.size();
          mapped_points.insert(mapped_points.end(), newly.begin(), newly.end());
          if (assign(oi + 1)) return true;
          mapped_points.resize(mark);
          q_orbit_used[qo] = 0;
        }
        for (int src : newly) {
          used[static_cast<size_t>(map[static_cast<size_t>(src)])] = 0;
          map[static_cast<size_t>(src)] = -1;
        }
      }
    }
    return false;
  };

  if (!assign(0)) return std::nullopt;

  // Full audit of the found witness: bijective, equivariant, order-iso.
  for (int x = 0; x < n; ++x)
    if (map[static_cast<size_t>(x)] == -1)
      throw std::logic_error("equivariant_poset_iso: incomplete witness");
  if (!is_equivariant_map(p, q, map) || !is_order_preserving(p, q, map))
    throw std::logic_error("equivariant_poset_iso: witness fails audit");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (q.less(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)]) && !p.less(x, y))
        throw std::logic_error("equivariant_poset_iso: witness fails reverse audit");
  return map;
}

bool is_order_preserving(const GPoset& p, const GPoset& q, const std::vector<int>& f) {
  if (static_cast<int64_t>(f.size()) != p.size())
    throw std::invalid_argument("is_order_preserving: map size mismatch");
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j : p.above(i))
      if (!(f[static_cast<size_t>(i)] == f[static_cast<size_t>(j)] ||
            q.less(f[static_cast<size_t>(i)], f[static_cast<size_t>(j)])))
        return false;
  return true;
}

bool is_equivariant_map(const GPoset& p, const GPoset& q, const std::vector<int>& f) {
  if (static_cast<int64_t>(f.size()) != p.size())
    throw std::invalid_argument("is_equivariant_map: map size mismatch");
  const GSet& sp = p.carrier();
  const GSet& sq = q.carrier();
  if (sp.group_ptr() != sq.group_ptr() && !sp.group().same_elements(sq.group()))
    throw std::invalid_argument("is_equivariant_map: posets over different groups");
  const int gens = static_cast<int>(sp.group().generators().size());
  for (int g = 0; g < gens; ++g)
    for (int x = 0; x < static_cast<int>(p.size()); ++x)
      if (f[static_cast<size_t>(sp.apply_gen(g, x))] !=
          sq.apply_gen(g, f[static_cast<size_t>(x)]))
        return false;
  return true;
}

std::vector<int> compose_maps(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(g.size());
  for (size_t x = 0; x < g.size(); ++x) out[x] = f[static_cast<size_t>(g[x])];
  return out;
}

bool pointwise_below_identity(const GPoset& p, const std::vector<int>& f) {
  for (int x = 0; x < static_cast<int>(p.size()); ++x)
    if (f[static_cast<size_t>(x)] != x && !p.less(f[static_cast<size_t>(x)], x)) return false;
  return true;
}

bool pointwise_above_identity(const GPoset& p, const std::vector<int>& f) {
  for (int x = 0; x < static_cast<int>(p.size()); ++x)
    if (f[static_cast<size_t>(x)] != x && !p.less(x, f[static_cast<size_t>(x)])) return false;
  return true;
}

}  // namespace burnside
