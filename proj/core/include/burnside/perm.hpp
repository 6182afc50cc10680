#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "burnside/errors.hpp"

namespace burnside {

// A permutation of {0, ..., degree-1} stored as its image sequence.
// Composition is right-to-left on points: (p * q)(x) = p(q(x)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  int order() const;

  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    return p.compose(q);
  }
  bool operator==(const Permutation&) const = default;
  // Lexicographic on (degree, images); gives every deterministic ordering below.
  std::strong_ordering operator<=>(const Permutation& o) const;

 private:
  std::vector<int> images_;
};

// Partition of n listing cycle lengths, weakly decreasing.
struct CycleType {
  std::vector<int> parts;

  static CycleType of(const Permutation& p);
  // Parses "2,1" style comma lists; sorts descending.
  static CycleType parse(const std::string& text);
  // All partitions of n in a fixed (descending-lex) order.
  static std::vector<CycleType> all_of(int n);

  int n() const;
  std::string to_string() const;
  bool operator==(const CycleType&) const = default;
  auto operator<=>(const CycleType&) const = default;
};

// Nibble packing for degrees <= 16: image of x sits in nibble (15 - x), so
// numeric order on packed values equals lexicographic order on images.
uint64_t pack_perm(const std::vector<int>& images);
inline uint64_t pack_perm(const Permutation& p) { return pack_perm(p.images()); }
std::vector<int> unpack_perm(uint64_t packed, int degree);

inline int packed_apply(uint64_t p, int x) {
  return static_cast<int>((p >> (4 * (15 - x))) & 0xFull);
}

inline uint64_t packed_compose(uint64_t p, uint64_t q, int degree) {
  uint64_t out = 0;
  for (int x = 0; x < degree; ++x) {
    int qx = packed_apply(q, x);
    out |= static_cast<uint64_t>(packed_apply(p, qx)) << (4 * (15 - x));
  }
  // Unused positions keep identity images so packed values stay canonical.
  for (int x = degree; x < 16; ++x) out |= static_cast<uint64_t>(x) << (4 * (15 - x));
  return out;
}

uint64_t packed_identity(int degree);
uint64_t packed_inverse(uint64_t p, int degree);
int packed_order(uint64_t p, int degree);
CycleType packed_cycle_type(uint64_t p, int degree);

}  // namespace burnside
