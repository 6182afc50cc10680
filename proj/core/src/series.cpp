#include "burnside/series.hpp"

#include <stdexcept>
#include <string>

#include "burnside/checked.hpp"
#include "burnside/ctx.hpp"
#include "burnside/errors.hpp"

namespace burnside {

LPolynomial::LPolynomial(TablePtr table) : table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("LPolynomial: null table");
}

LPolynomial LPolynomial::from_element(BurnsideElement e, int l_power) {
  LPolynomial p(e.table_ptr());
  p.add_term(e, l_power);
  return p;
}

LPolynomial LPolynomial::one(TablePtr table) {
  return from_element(BurnsideElement::one(std::move(table)), 0);
}

BurnsideElement LPolynomial::coeff(int l_power) const {
  if (l_power < 0) throw std::invalid_argument("LPolynomial: negative power");
  if (l_power >= static_cast<int>(coeffs_.size())) return BurnsideElement::zero(table_);
  return coeffs_[static_cast<size_t>(l_power)];
}

bool LPolynomial::is_effective() const {
  for (const BurnsideElement& c : coeffs_)
    if (!c.is_effective()) return false;
  return true;
}

void LPolynomial::add_term(const BurnsideElement& e, int l_power) {
  if (l_power < 0) throw std::invalid_argument("LPolynomial: negative power");
  if (e.table_ptr() != table_)
    throw std::invalid_argument("LPolynomial: coefficient over a different table");
  while (static_cast<int>(coeffs_.size()) <= l_power)
    coeffs_.push_back(BurnsideElement::zero(table_));
  coeffs_[static_cast<size_t>(l_power)] += e;
  trim();
}

void LPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LPolynomial& LPolynomial::operator+=(const LPolynomial& o) {
  if (o.table_ != table_) throw std::invalid_argument("LPolynomial: table mismatch");
  while (coeffs_.size() < o.coeffs_.size()) coeffs_.push_back(BurnsideElement::zero(table_));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

LPolynomial& LPolynomial::operator-=(const LPolynomial& o) {
  if (o.table_ != table_) throw std::invalid_argument("LPolynomial: table mismatch");
  while (coeffs_.size() < o.coeffs_.size()) coeffs_.push_back(BurnsideElement::zero(table_));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

LPolynomial LPolynomial::operator-() const {
  LPolynomial out(table_);
  out.coeffs_.reserve(coeffs_.size());
  for (const BurnsideElement& c : coeffs_) out.coeffs_.push_back(-c);
  return out;
}

LPolynomial LPolynomial::operator*(const LPolynomial& o) const {
  if (o.table_ != table_) throw std::invalid_argument("LPolynomial: table mismatch");
  LPolynomial out(table_);
  if (coeffs_.empty() || o.coeffs_.empty()) return out;
  out.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, BurnsideElement::zero(table_));
  for (size_t a = 0; a < coeffs_.size(); ++a)
    for (size_t b = 0; b < o.coeffs_.size(); ++b)
      out.coeffs_[a + b] += coeffs_[a] * o.coeffs_[b];
  out.trim();
  return out;
}

LPolynomial LPolynomial::operator*(int64_t k) const {
  LPolynomial out(table_);
  out.coeffs_.reserve(coeffs_.size());
  for (const BurnsideElement& c : coeffs_) out.coeffs_.push_back(c * k);
  out.trim();
  return out;
}

bool LPolynomial::operator==(const LPolynomial& o) const {
  return table_ == o.table_ && coeffs_ == o.coeffs_;
}

LPolynomial LPolynomial::shifted(int dl) const {
  if (dl < 0) throw std::invalid_argument("LPolynomial: negative shift");
  LPolynomial out(table_);
  if (coeffs_.empty()) return out;
  out.coeffs_.assign(coeffs_.size() + static_cast<size_t>(dl), BurnsideElement::zero(table_));
  for (size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k + static_cast<size_t>(dl)] = coeffs_[k];
  return out;
}

namespace {

void check_truncation(Ctx& ctx, int truncation) {
  if (truncation < 0) throw std::invalid_argument("Series: negative truncation");
  if (truncation > ctx.caps().max_truncation)
    throw CapExceeded("Series: truncation exceeds cap " +
                      std::to_string(ctx.caps().max_truncation));
}

}  // namespace

Series::Series(Ctx& ctx, int truncation) : truncation_(truncation) {
  check_truncation(ctx, truncation);
  coeffs_.reserve(static_cast<size_t>(truncation) + 1);
  for (int i = 0; i <= truncation; ++i) coeffs_.emplace_back(ctx.symmetric_table(i));
}

Series Series::one(Ctx& ctx, int truncation) {
  Series s(ctx, truncation);
  s.set_coeff(0, LPolynomial::one(ctx.symmetric_table(0)));
  return s;
}

const LPolynomial& Series::coeff(int t_power) const {
  if (t_power < 0 || t_power > truncation_)
    throw std::invalid_argument("Series: power outside truncation");
  return coeffs_[static_cast<size_t>(t_power)];
}

void Series::set_coeff(int t_power, LPolynomial value) {
  if (t_power < 0 || t_power > truncation_)
    throw std::invalid_argument("Series: power outside truncation");
  if (value.table_ptr() != coeffs_[static_cast<size_t>(t_power)].table_ptr())
    throw std::invalid_argument("Series: coefficient over the wrong degree");
  coeffs_[static_cast<size_t>(t_power)] = std::move(value);
}

bool Series::operator==(const Series& o) const {
  return truncation_ == o.truncation_ && coeffs_ == o.coeffs_;
}

namespace {

// Induced outer pairing of two L-polynomials, landing over the symmetric
// group whose degree is the sum of the factors' degrees.
LPolynomial lpoly_outer_induce(Ctx& ctx, const GroupPtr& target, const LPolynomial& x,
                               const LPolynomial& y) {
  LPolynomial out(ctx.table(target));
  for (int a = 0; a <= x.degree(); ++a) {
    const BurnsideElement xa = x.coeff(a);
    if (xa.is_zero()) continue;
    for (int b = 0; b <= y.degree(); ++b) {
      const BurnsideElement yb = y.coeff(b);
      if (yb.is_zero()) continue;
      out.add_term(induce_b(ctx, target, outer_young(ctx, xa, yb)), a + b);
    }
  }
  return out;
}

}  // namespace

Series star_mul(Ctx& ctx, const Series& a, const Series& b) {
  if (a.truncation() != b.truncation())
    throw std::invalid_argument("star_mul: truncation mismatch");
  Series out(ctx, a.truncation());
  for (int n = 0; n <= a.truncation(); ++n) {
    LPolynomial acc(ctx.symmetric_table(n));
    const GroupPtr target = ctx.symmetric(n);
    for (int i = 0; i <= n; ++i) acc += lpoly_outer_induce(ctx, target, a.coeff(i), b.coeff(n - i));
    out.set_coeff(n, std::move(acc));
  }
  return out;
}

Series star_inverse(Ctx& ctx, const Series& a) {
  if (!(a.coeff(0) == LPolynomial::one(ctx.symmetric_table(0))))
    throw std::invalid_argument("star_inverse: constant coefficient must be 1");
  Series out = Series::one(ctx, a.truncation());
  for (int n = 1; n <= a.truncation(); ++n) {
    LPolynomial acc(ctx.symmetric_table(n));
    const GroupPtr target = ctx.symmetric(n);
    for (int i = 1; i <= n; ++i) acc += lpoly_outer_induce(ctx, target, a.coeff(i), out.coeff(n - i));
    out.set_coeff(n, -acc);
  }
  return out;
}

Series exp_monomial(Ctx& ctx, int64_t m, int d, int truncation) {
  if (m < 0) throw std::invalid_argument("exp_monomial: negative multiplicity");
  if (d < 0) throw std::invalid_argument("exp_monomial: negative L-power");
  Series out(ctx, truncation);
  const GSet base = trivial_gset(ctx.trivial(0), m, ctx.caps());
  for (int i = 0; i <= truncation; ++i) {
    const GSet tuples = power_gset(ctx, base, i);
    out.set_coeff(i, LPolynomial::from_element(from_gset(ctx, tuples), d * i));
  }
  return out;
}

Series exp_lpoly(Ctx& ctx, const std::vector<int64_t>& int_poly, int truncation) {
  Series out = Series::one(ctx, truncation);
  for (size_t d = 0; d < int_poly.size(); ++d) {
    const int64_t c = int_poly[d];
    if (c == 0) continue;
    Series factor = exp_monomial(ctx, c < 0 ? -c : c, static_cast<int>(d), truncation);
    if (c < 0) factor = star_inverse(ctx, factor);
    out = star_mul(ctx, out, factor);
  }
  return out;
}

BurnsideElement int_power(Ctx& ctx, int64_t m, int i) {
  const Series s = exp_lpoly(ctx, {m}, i);
  const LPolynomial& top = s.coeff(i);
  if (top.degree() > 0)
    throw std::logic_error("int_power: unexpected L-dependence");
  return top.coeff(0);
}

BurnsideElement minus_one_power(Ctx& ctx, int i) { return int_power(ctx, -1, i); }

}  // namespace burnside
