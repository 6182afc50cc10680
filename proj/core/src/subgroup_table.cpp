#include "burnside/subgroup_table.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "burnside/checked.hpp"

namespace burnside {

namespace {

bool member(const std::vector<uint64_t>& sorted, uint64_t v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<uint64_t> close_packed(int deg, const std::vector<uint64_t>& gens) {
  const uint64_t id = packed_identity(deg);
  std::unordered_set<uint64_t> seen{id};
  std::vector<uint64_t> queue{id};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const uint64_t x = queue[qi];
    for (uint64_t g : gens) {
      const uint64_t y = packed_compose(x, g, deg);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_prime_power(int o) {
  if (o < 2) return false;
  int p = 2;
  while (p * p <= o && o % p != 0) ++p;
  if (p * p > o) p = o;
  while (o % p == 0) o /= p;
  return o == 1;
}

std::string bucket_key_packed(const std::vector<uint64_t>& elems, int deg) {
  std::vector<std::string> types;
  types.reserve(elems.size());
  for (uint64_t e : elems) {
    std::string s;
    for (int part : packed_cycle_type(e, deg).parts) s.push_back(static_cast<char>('A' + part));
    types.push_back(std::move(s));
  }
  std::sort(types.begin(), types.end());
  std::string key = std::to_string(elems.size());
  for (const auto& t : types) {
    key.push_back('|');
    key += t;
  }
  return key;
}

std::string elems_bytes(const std::vector<uint64_t>& sorted) {
  std::string s;
  s.reserve(sorted.size() * 8);
  for (uint64_t v : sorted)
    for (int b = 0; b < 8; ++b) s.push_back(static_cast<char>((v >> (8 * b)) & 0xFF));
  return s;
}

uint64_t elems_hash(const std::vector<uint64_t>& sorted) {
  uint64_t h = 1469598103934665603ull;
  for (uint64_t v : sorted) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string subgroup_bucket_key(const PermutationGroup& h) {
  return bucket_key_packed(h.packed_elements(), h.degree());
}

SubgroupTable::SubgroupTable(std::shared_ptr<const PermutationGroup> ambient,
                             std::vector<SubgroupClass> classes,
                             std::vector<std::vector<int64_t>> marks, Caps caps)
    : ambient_(std::move(ambient)),
      classes_(std::move(classes)),
      marks_(std::move(marks)),
      caps_(caps) {
  const int64_t n = ambient_->order();
  const size_t k = classes_.size();
  if (k == 0 || marks_.size() != k) throw std::invalid_argument("table shape mismatch");
  if (classes_.front().order != 1) throw std::invalid_argument("first class must be trivial");
  if (classes_.back().order != n) throw std::invalid_argument("last class must be the full group");
  for (size_t r = 0; r < k; ++r) {
    const auto& c = classes_[r];
    if (marks_[r].size() != k) throw std::invalid_argument("marks row shape mismatch");
    if (c.order <= 0 || n % c.order != 0 || c.normalizer_order % c.order != 0 ||
        n % c.normalizer_order != 0)
      throw std::invalid_argument("class orders inconsistent with ambient order");
    if (r > 0 && classes_[r - 1].order > c.order)
      throw std::invalid_argument("classes not sorted by order");
    for (size_t cc = r + 1; cc < k; ++cc)
      if (marks_[r][cc] != 0) throw std::invalid_argument("marks not lower triangular");
    if (marks_[r][r] != c.normalizer_order / c.order)
      throw std::invalid_argument("diagonal mark != normalizer index");
    if (marks_[r][0] != n / c.order)
      throw std::invalid_argument("first-column mark != subgroup index");
  }
}

int SubgroupTable::class_index_of(const PermutationGroup& h) const {
  if (!h.is_subgroup_of(*ambient_))
    throw std::invalid_argument("class_index_of requires a subgroup of the ambient group");
  std::vector<uint64_t> sorted = h.packed_elements();
  std::sort(sorted.begin(), sorted.end());
  const std::string key = elems_bytes(sorted);

  std::lock_guard<std::mutex> lock(memo_mu_);
  if (auto it = class_memo_.find(key); it != class_memo_.end()) return it->second;

  const int deg = ambient_->degree();
  const std::string bucket = bucket_key_packed(sorted, deg);
  std::vector<uint64_t> hgens;
  for (const auto& p : h.generators()) hgens.push_back(pack_perm(p));
  for (int r = 0; r < num_classes(); ++r) {
    const auto& c = classes_[static_cast<size_t>(r)];
    if (c.order != h.order() || c.bucket != bucket) continue;
    for (uint64_t g : ambient_->packed_elements()) {
      const uint64_t ginv = packed_inverse(g, deg);
      bool ok = true;
      for (uint64_t x : hgens) {
        if (!member(c.sorted_elements, packed_compose(packed_compose(g, x, deg), ginv, deg))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        class_memo_.emplace(key, r);
        return r;
      }
    }
  }
  throw std::logic_error("subgroup not matched to any conjugacy class");
}

const std::vector<int64_t>* SubgroupTable::cached_product(int r, int c) const {
  const uint64_t key = (static_cast<uint64_t>(std::min(r, c)) << 32) |
                       static_cast<uint64_t>(std::max(r, c));
  std::lock_guard<std::mutex> lock(memo_mu_);
  auto it = product_memo_.find(key);
  return it == product_memo_.end() ? nullptr : &it->second;
}

void SubgroupTable::store_product(int r, int c, std::vector<int64_t> coeffs) const {
  const uint64_t key = (static_cast<uint64_t>(std::min(r, c)) << 32) |
                       static_cast<uint64_t>(std::max(r, c));
  std::lock_guard<std::mutex> lock(memo_mu_);
  product_memo_.emplace(key, std::move(coeffs));
}

SubgroupTable enumerate_subgroup_classes(std::shared_ptr<const PermutationGroup> ambient,
                                         const Caps& caps) {
  if (ambient->order() > caps.max_group_order)
    throw CapExceeded("group order exceeds enumeration cap");
  const int deg = ambient->degree();
  const auto& gp = ambient->packed_elements();
  const int64_t n = ambient->order();

  std::vector<uint64_t> inv(static_cast<size_t>(n));
  std::vector<char> prime_power(static_cast<size_t>(n), 0);
  for (size_t i = 0; i < gp.size(); ++i) {
    inv[i] = packed_inverse(gp[i], deg);
    prime_power[i] = is_prime_power(packed_order(gp[i], deg)) ? 1 : 0;
  }
  auto idx_of = [&](uint64_t p) {
    int i = ambient->element_index_packed(p);
    if (i < 0) throw std::logic_error("element escaped the ambient group");
    return static_cast<size_t>(i);
  };

  struct Rec {
    std::vector<uint64_t> elems;  // sorted
    std::vector<uint64_t> gens;
  };
  std::vector<Rec> subs;
  std::unordered_map<uint64_t, std::vector<int>> sub_hash;
  auto register_sub = [&](std::vector<uint64_t> elems,
                          std::vector<uint64_t> gens) -> std::pair<int, bool> {
    const uint64_t h = elems_hash(elems);
    for (int id : sub_hash[h])
      if (subs[static_cast<size_t>(id)].elems == elems) return {id, false};
    const int id = static_cast<int>(subs.size());
    subs.push_back(Rec{std::move(elems), std::move(gens)});
    sub_hash[h].push_back(id);
    return {id, true};
  };

  struct ClsRec {
    int rep;
    std::string bucket;
  };
  std::vector<ClsRec> classes;
  std::unordered_map<std::string, std::vector<int>> buckets;
  std::deque<int> worklist;

  auto conjugate_to = [&](const Rec& k, const Rec& rep) {
    std::vector<uint64_t> kgens = k.gens;
    if (kgens.empty()) kgens.push_back(packed_identity(deg));
    for (size_t gi = 0; gi < gp.size(); ++gi) {
      bool ok = true;
      for (uint64_t x : kgens) {
        if (!member(rep.elems, packed_compose(packed_compose(gp[gi], x, deg), inv[gi], deg))) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  };

  auto classify = [&](int sub_id) {
    const Rec& k = subs[static_cast<size_t>(sub_id)];
    std::string bucket = bucket_key_packed(k.elems, deg);
    for (int cid : buckets[bucket]) {
      const Rec& rep = subs[static_cast<size_t>(classes[static_cast<size_t>(cid)].rep)];
      if (rep.elems.size() == k.elems.size() && conjugate_to(k, rep)) return;
    }
    const int cid = static_cast<int>(classes.size());
    classes.push_back(ClsRec{sub_id, bucket});
    buckets[bucket].push_back(cid);
    worklist.push_back(cid);
  };

  // Seed: trivial subgroup plus every cyclic subgroup.
  {
    auto [tid, fresh] = register_sub({packed_identity(deg)}, {});
    if (fresh) classify(tid);
  }
  for (size_t i = 1; i < gp.size(); ++i) {
    auto elems = close_packed(deg, {gp[i]});
    auto [id, fresh] = register_sub(std::move(elems), {gp[i]});
    if (fresh) classify(id);
  }

  auto normalizer_elems = [&](const Rec& h) {
    std::vector<uint64_t> out;
    for (size_t gi = 0; gi < gp.size(); ++gi) {
      bool ok = true;
      for (uint64_t x : h.gens) {
        if (!member(h.elems, packed_compose(packed_compose(gp[gi], x, deg), inv[gi], deg))) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(gp[gi]);
    }
    return out;
  };

  while (!worklist.empty()) {
    const int cid = worklist.front();
    worklist.pop_front();
    // Copy: subs may reallocate while extensions register new subgroups.
    const Rec h = subs[static_cast<size_t>(classes[static_cast<size_t>(cid)].rep)];
    if (static_cast<int64_t>(h.elems.size()) == n) continue;
    const std::vector<uint64_t> nelems = normalizer_elems(h);

    std::vector<char> marked(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < gp.size(); ++i) {
      if (marked[i] || !prime_power[i] || member(h.elems, gp[i])) continue;
      // Mark the whole N-conjugacy orbit; extending by any member of it
      // produces a conjugate subgroup.
      for (uint64_t ng : nelems) {
        const uint64_t c =
            packed_compose(packed_compose(ng, gp[i], deg), packed_inverse(ng, deg), deg);
        marked[idx_of(c)] = 1;
      }
      std::vector<uint64_t> gens2 = h.gens;
      gens2.push_back(gp[i]);
      auto elems2 = close_packed(deg, gens2);
      auto [id, fresh] = register_sub(std::move(elems2), std::move(gens2));
      if (fresh) classify(id);
    }
  }

  // Canonical key per class: minimal sorted element list over all conjugates,
  // walked over cosets of the normalizer (conjugation is constant on them).
  struct Final {
    int64_t order;
    std::string bucket;
    std::vector<uint64_t> min_elems;
    int64_t normalizer_order;
  };
  std::vector<Final> finals;
  finals.reserve(classes.size());
  for (const auto& cls : classes) {
    const Rec& h = subs[static_cast<size_t>(cls.rep)];
    const std::vector<uint64_t> nelems = normalizer_elems(h);
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::vector<uint64_t> best;
    for (size_t gi = 0; gi < gp.size(); ++gi) {
      if (visited[gi]) continue;
      for (uint64_t ng : nelems) visited[idx_of(packed_compose(gp[gi], ng, deg))] = 1;
      std::vector<uint64_t> conj;
      conj.reserve(h.elems.size());
      for (uint64_t x : h.elems)
        conj.push_back(packed_compose(packed_compose(gp[gi], x, deg), inv[gi], deg));
      std::sort(conj.begin(), conj.end());
      if (best.empty() || conj < best) best = std::move(conj);
    }
    finals.push_back(Final{static_cast<int64_t>(h.elems.size()), cls.bucket, std::move(best),
                           static_cast<int64_t>(nelems.size())});
  }
  std::sort(finals.begin(), finals.end(), [](const Final& a, const Final& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.bucket != b.bucket) return a.bucket < b.bucket;
    return a.min_elems < b.min_elems;
  });
  for (size_t i = 1; i < finals.size(); ++i)
    if (finals[i - 1].order == finals[i].order && finals[i - 1].bucket == finals[i].bucket &&
        finals[i - 1].min_elems == finals[i].min_elems)
      throw std::logic_error("duplicate subgroup class after canonical sort");

  std::vector<SubgroupClass> out;
  out.reserve(finals.size());
  for (size_t i = 0; i < finals.size(); ++i) {
    std::vector<Permutation> perms;
    perms.reserve(finals[i].min_elems.size());
    for (uint64_t p : finals[i].min_elems) perms.emplace_back(unpack_perm(p, deg));
    SubgroupClass sc{PermutationGroup::from_elements(deg, std::move(perms)),
                     finals[i].order,
                     finals[i].normalizer_order,
                     "o" + std::to_string(finals[i].order) + "_c" + std::to_string(i),
                     finals[i].min_elems,
                     finals[i].bucket};
    out.push_back(std::move(sc));
  }

  auto marks = compute_marks(*ambient, out);
  return SubgroupTable(std::move(ambient), std::move(out), std::move(marks), caps);
}

std::vector<std::vector<int64_t>> compute_marks(const PermutationGroup& ambient,
                                                const std::vector<SubgroupClass>& classes) {
  const int deg = ambient.degree();
  const auto& gp = ambient.packed_elements();
  const int64_t n = ambient.order();
  auto idx_of = [&](uint64_t p) {
    int i = ambient.element_index_packed(p);
    if (i < 0) throw std::logic_error("element escaped the ambient group");
    return static_cast<size_t>(i);
  };

  const size_t k = classes.size();
  std::vector<std::vector<int64_t>> marks(k, std::vector<int64_t>(k, 0));
  for (size_t r = 0; r < k; ++r) {
    std::vector<int> coset_of(static_cast<size_t>(n), -1);
    std::vector<size_t> reps;
    for (size_t gi = 0; gi < gp.size(); ++gi) {
      if (coset_of[gi] >= 0) continue;
      const int coset_id = static_cast<int>(reps.size());
      reps.push_back(gi);
      for (uint64_t x : classes[r].sorted_elements)
        coset_of[idx_of(packed_compose(gp[gi], x, deg))] = coset_id;
    }
    for (size_t c = 0; c < k; ++c) {
      std::vector<uint64_t> cgens;
      for (const auto& p : classes[c].representative.generators()) cgens.push_back(pack_perm(p));
      int64_t count = 0;
      for (size_t gi : reps) {
        const uint64_t ginv = packed_inverse(gp[gi], deg);
        bool fixed = true;
        for (uint64_t hg : cgens) {
          if (!member(classes[r].sorted_elements,
                      packed_compose(packed_compose(ginv, hg, deg), gp[gi], deg))) {
            fixed = false;
            break;
          }
        }
        if (fixed) ++count;
      }
      marks[r][c] = count;
    }
  }
  return marks;
}

}  // namespace burnside
