#pragma once

#include <cstdint>
#include <vector>

#include "burnside/element.hpp"

namespace burnside {

class Ctx;

// Polynomial in one central variable L with coefficients in the ring over a
// fixed table. Stored densely by L-power and trimmed, so degree() is the top
// nonzero power (-1 for zero).
class LPolynomial {
 public:
  explicit LPolynomial(TablePtr table);  // zero
  static LPolynomial from_element(BurnsideElement e, int l_power = 0);
  static LPolynomial one(TablePtr table);

  const SubgroupTable& table() const { return *table_; }
  const TablePtr& table_ptr() const { return table_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Zero element beyond the degree.
  BurnsideElement coeff(int l_power) const;
  const std::vector<BurnsideElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Every coefficient effective.
  bool is_effective() const;

  LPolynomial& operator+=(const LPolynomial& o);
  LPolynomial& operator-=(const LPolynomial& o);
  friend LPolynomial operator+(LPolynomial a, const LPolynomial& b) {
    a += b;
    return a;
  }
  friend LPolynomial operator-(LPolynomial a, const LPolynomial& b) {
    a -= b;
    return a;
  }
  LPolynomial operator-() const;
  LPolynomial operator*(const LPolynomial& o) const;
  LPolynomial operator*(int64_t k) const;
  bool operator==(const LPolynomial& o) const;

  LPolynomial shifted(int dl) const;  // multiply by L^dl

  void add_term(const BurnsideElement& e, int l_power);

 private:
  void trim();

  TablePtr table_;
  std::vector<BurnsideElement> coeffs_;
};

// Truncated series in T: coefficient of T^i is an LPolynomial over the
// symmetric group of degree i. All coefficients up to the truncation order
// are stored.
class Series {
 public:
  Series(Ctx& ctx, int truncation);  // zero
  static Series one(Ctx& ctx, int truncation);

  int truncation() const { return truncation_; }
  const LPolynomial& coeff(int t_power) const;
  void set_coeff(int t_power, LPolynomial value);

  bool operator==(const Series& o) const;

 private:
  int truncation_;
  std::vector<LPolynomial> coeffs_;
};

// Coefficient of T^n is the sum over i + j = n of the induced outer pairing
// of the factors' coefficients; L-powers multiply through.
Series star_mul(Ctx& ctx, const Series& a, const Series& b);
// Two-sided inverse for the star product; requires constant coefficient 1.
Series star_inverse(Ctx& ctx, const Series& a);

// Series with T^i coefficient L^(d*i) times the class of i-tuples from an
// m-point trivially-acted set; m >= 0.
Series exp_monomial(Ctx& ctx, int64_t m, int d, int truncation);
// Star product of exp_monomial over the integer polynomial's terms (index =
// L-power); negative coefficients enter through star_inverse.
Series exp_lpoly(Ctx& ctx, const std::vector<int64_t>& int_poly, int truncation);

// T^i coefficient of exp_lpoly({m}): the canonical i-th power class of the
// integer m. Defined for any m, including negatives.
BurnsideElement int_power(Ctx& ctx, int64_t m, int i);
BurnsideElement minus_one_power(Ctx& ctx, int i);

}  // namespace burnside
