#include "burnside/element.hpp"

#include <stdexcept>

#include "burnside/checked.hpp"
#include "burnside/ctx.hpp"

namespace burnside {

BurnsideElement::BurnsideElement(TablePtr table)
    : table_(std::move(table)), coeffs_(static_cast<size_t>(table_->num_classes()), 0) {}

BurnsideElement BurnsideElement::zero(TablePtr table) { return BurnsideElement(std::move(table)); }

BurnsideElement BurnsideElement::one(TablePtr table) {
  BurnsideElement x(std::move(table));
  x.coeffs_[static_cast<size_t>(x.table_->identity_class_index())] = 1;
  return x;
}

BurnsideElement BurnsideElement::basis(TablePtr table, int class_index) {
  BurnsideElement x(std::move(table));
  if (class_index < 0 || class_index >= x.table_->num_classes())
    throw std::invalid_argument("basis class index out of range");
  x.coeffs_[static_cast<size_t>(class_index)] = 1;
  return x;
}

BurnsideElement BurnsideElement::constant(TablePtr table, int64_t k) {
  BurnsideElement x(std::move(table));
  x.coeffs_[static_cast<size_t>(x.table_->identity_class_index())] = k;
  return x;
}

bool BurnsideElement::is_zero() const {
  for (int64_t c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool BurnsideElement::is_effective() const {
  for (int64_t c : coeffs_)
    if (c < 0) return false;
  return true;
}

void BurnsideElement::check_same_table(const BurnsideElement& o) const {
  if (table_.get() != o.table_.get())
    throw std::invalid_argument("operands live over different subgroup tables");
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& o) {
  check_same_table(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& o) {
  check_same_table(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_sub(coeffs_[i], o.coeffs_[i]);
  return *this;
}

BurnsideElement BurnsideElement::operator-() const {
  BurnsideElement x(table_);
  for (size_t i = 0; i < coeffs_.size(); ++i) x.coeffs_[i] = checked_neg(coeffs_[i]);
  return x;
}

BurnsideElement BurnsideElement::operator*(int64_t k) const {
  BurnsideElement x(table_);
  for (size_t i = 0; i < coeffs_.size(); ++i) x.coeffs_[i] = checked_mul(coeffs_[i], k);
  return x;
}

bool BurnsideElement::operator==(const BurnsideElement& o) const {
  return table_.get() == o.table_.get() && coeffs_ == o.coeffs_;
}

namespace {

// [G/H_r] * [G/H_c] decomposed by orbit counting on the product of the two
// coset spaces; memoized in the table.
const std::vector<int64_t>& basis_product(const TablePtr& table, int r, int c) {
  if (const auto* hit = table->cached_product(r, c)) return *hit;
  const Caps& caps = table->caps();
  const GSet a = coset_gset(table->ambient_ptr(), table->cls(r).representative, caps);
  const GSet b = coset_gset(table->ambient_ptr(), table->cls(c).representative, caps);
  const GSet p = product_gset(a, b, caps);
  std::vector<int64_t> coeffs(static_cast<size_t>(table->num_classes()), 0);
  for (const auto& orbit : p.orbits()) {
    const int k = table->class_index_of(p.stabilizer(orbit.representative));
    coeffs[static_cast<size_t>(k)] = checked_add(coeffs[static_cast<size_t>(k)], 1);
  }
  table->store_product(r, c, std::move(coeffs));
  return *table->cached_product(r, c);
}

}  // namespace

BurnsideElement BurnsideElement::operator*(const BurnsideElement& o) const {
  check_same_table(o);
  BurnsideElement out(table_);
  for (int r = 0; r < table_->num_classes(); ++r) {
    if (coeff(r) == 0) continue;
    for (int c = 0; c < table_->num_classes(); ++c) {
      if (o.coeff(c) == 0) continue;
      const int64_t scale = checked_mul(coeff(r), o.coeff(c));
      const auto& vec = basis_product(table_, r, c);
      for (size_t k = 0; k < vec.size(); ++k)
        out.coeffs_[k] = checked_add(out.coeffs_[k], checked_mul(scale, vec[k]));
    }
  }
  return out;
}

int64_t BurnsideElement::mark_at_class(int class_index) const {
  int64_t m = 0;
  for (int r = 0; r < table_->num_classes(); ++r)
    m = checked_add(m, checked_mul(coeffs_[static_cast<size_t>(r)],
                                   table_->mark(r, class_index)));
  return m;
}

int64_t BurnsideElement::mark_at(const PermutationGroup& h) const {
  return mark_at_class(table_->class_index_of(h));
}

BurnsideElement from_gset(Ctx& ctx, const GSet& s) {
  const TablePtr table = ctx.table(s.group_ptr());
  std::vector<int64_t> coeffs(static_cast<size_t>(table->num_classes()), 0);
  for (const auto& orbit : s.orbits()) {
    const int k = table->class_index_of(s.stabilizer(orbit.representative));
    coeffs[static_cast<size_t>(k)] = checked_add(coeffs[static_cast<size_t>(k)], 1);
  }
  BurnsideElement out(table);
  for (int k = 0; k < table->num_classes(); ++k)
    out += BurnsideElement::basis(table, k) * coeffs[static_cast<size_t>(k)];
  return out;
}

BurnsideElement induce_b(Ctx& ctx, const GroupPtr& g, const BurnsideElement& x) {
  const PermutationGroup& h = x.table().ambient();
  if (!h.is_subgroup_of(*g))
    throw std::invalid_argument("induce_b requires the source group to sit inside the target");
  const TablePtr tg = ctx.table(g);
  BurnsideElement out(tg);
  for (int r = 0; r < x.table().num_classes(); ++r) {
    if (x.coeff(r) == 0) continue;
    const int k = tg->class_index_of(x.table().cls(r).representative);
    out += BurnsideElement::basis(tg, k) * x.coeff(r);
  }
  return out;
}

BurnsideElement restrict_b(Ctx& ctx, const GroupPtr& h, const BurnsideElement& x) {
  const TablePtr th = ctx.table(h);
  if (!h->is_subgroup_of(x.table().ambient()))
    throw std::invalid_argument("restrict_b requires a subgroup of the source group");
  BurnsideElement out(th);
  for (int r = 0; r < x.table().num_classes(); ++r) {
    if (x.coeff(r) == 0) continue;
    const GSet cos = coset_gset(x.table().ambient_ptr(), x.table().cls(r).representative,
                                x.table().caps());
    out += from_gset(ctx, restrict_gset(cos, h)) * x.coeff(r);
  }
  return out;
}

GroupPtr block_product_group(Ctx& ctx, const PermutationGroup& a, const PermutationGroup& b) {
  const int da = a.degree();
  const int db = b.degree();
  std::vector<Permutation> gens;
  for (const auto& p : a.generators()) {
    std::vector<int> img(static_cast<size_t>(da + db));
    for (int x = 0; x < da; ++x) img[static_cast<size_t>(x)] = p(x);
    for (int x = da; x < da + db; ++x) img[static_cast<size_t>(x)] = x;
    gens.emplace_back(std::move(img));
  }
  for (const auto& p : b.generators()) {
    std::vector<int> img(static_cast<size_t>(da + db));
    for (int x = 0; x < da; ++x) img[static_cast<size_t>(x)] = x;
    for (int x = 0; x < db; ++x) img[static_cast<size_t>(da + x)] = da + p(x);
    gens.emplace_back(std::move(img));
  }
  return ctx.intern(PermutationGroup::closure(da + db, std::move(gens)));
}

namespace {

PermutationGroup block_product_subgroup(int da, const PermutationGroup& a,
                                        const PermutationGroup& b) {
  const int db = b.degree();
  std::vector<Permutation> elems;
  elems.reserve(static_cast<size_t>(a.order() * b.order()));
  for (const auto& pa : a.elements())
    for (const auto& pb : b.elements()) {
      std::vector<int> img(static_cast<size_t>(da + db));
      for (int x = 0; x < da; ++x) img[static_cast<size_t>(x)] = pa(x);
      for (int x = 0; x < db; ++x) img[static_cast<size_t>(da + x)] = da + pb(x);
      elems.emplace_back(std::move(img));
    }
  return PermutationGroup::from_elements(da + db, std::move(elems));
}

}  // namespace

BurnsideElement outer_young(Ctx& ctx, const BurnsideElement& x, const BurnsideElement& y) {
  const PermutationGroup& ga = x.table().ambient();
  const PermutationGroup& gb = y.table().ambient();
  const GroupPtr prod = block_product_group(ctx, ga, gb);
  const TablePtr tp = ctx.table(prod);
  BurnsideElement out(tp);
  for (int r = 0; r < x.table().num_classes(); ++r) {
    if (x.coeff(r) == 0) continue;
    for (int c = 0; c < y.table().num_classes(); ++c) {
      if (y.coeff(c) == 0) continue;
      const PermutationGroup ab = block_product_subgroup(
          ga.degree(), x.table().cls(r).representative, y.table().cls(c).representative);
      const int k = tp->class_index_of(ab);
      out += BurnsideElement::basis(tp, k) * checked_mul(x.coeff(r), y.coeff(c));
    }
  }
  return out;
}

BurnsideElement double_coset_product(const TablePtr& table, const PermutationGroup& h,
                                     const PermutationGroup& k) {
  const PermutationGroup& g = table->ambient();
  if (!h.is_subgroup_of(g) || !k.is_subgroup_of(g))
    throw std::invalid_argument("double_coset_product requires subgroups of the ambient group");
  const int deg = g.degree();
  const auto& gp = g.packed_elements();
  std::vector<char> visited(gp.size(), 0);
  BurnsideElement out(table);
  for (size_t gi = 0; gi < gp.size(); ++gi) {
    if (visited[gi]) continue;
    for (uint64_t a : h.packed_elements()) {
      const uint64_t ag = packed_compose(a, gp[gi], deg);
      for (uint64_t b : k.packed_elements()) {
        const int idx = g.element_index_packed(packed_compose(ag, b, deg));
        visited[static_cast<size_t>(idx)] = 1;
      }
    }
    // H cap g K g^-1 = {a in H : g^-1 a g in K}.
    const uint64_t ginv = packed_inverse(gp[gi], deg);
    std::vector<Permutation> inter;
    for (uint64_t a : h.packed_elements()) {
      const uint64_t conj = packed_compose(packed_compose(ginv, a, deg), gp[gi], deg);
      if (k.contains_packed(conj)) inter.emplace_back(unpack_perm(a, deg));
    }
    const int cls = table->class_index_of(PermutationGroup::from_elements(deg, std::move(inter)));
    out += BurnsideElement::basis(table, cls);
  }
  return out;
}

}  // namespace burnside
