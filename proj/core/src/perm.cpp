#include "burnside/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace burnside {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("permutation images must be a bijection on [0, degree)");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<int> im(static_cast<size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in compose");
  std::vector<int> im(images_.size());
  for (size_t x = 0; x < im.size(); ++x) im[x] = images_[static_cast<size_t>(rhs.images_[x])];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (size_t x = 0; x < im.size(); ++x) im[static_cast<size_t>(images_[x])] = static_cast<int>(x);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

int Permutation::order() const {
  int ord = 1;
  for (int part : CycleType::of(*this).parts) ord = std::lcm(ord, part);
  return ord;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (size_t s = 0; s < images_.size(); ++s) {
    if (seen[s] || images_[s] == static_cast<int>(s)) continue;
    any = true;
    out << '(';
    size_t x = s;
    bool first = true;
    do {
      if (!first) out << ' ';
      first = false;
      out << x;
      seen[x] = 1;
      x = static_cast<size_t>(images_[x]);
    } while (x != s);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::strong_ordering Permutation::operator<=>(const Permutation& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  return images_ <=> o.images_;
}

CycleType CycleType::of(const Permutation& p) {
  CycleType t;
  std::vector<char> seen(static_cast<size_t>(p.degree()), 0);
  for (int s = 0; s < p.degree(); ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    int len = 0, x = s;
    do {
      seen[static_cast<size_t>(x)] = 1;
      x = p(x);
      ++len;
    } while (x != s);
    t.parts.push_back(len);
  }
  std::sort(t.parts.rbegin(), t.parts.rend());
  return t;
}

CycleType CycleType::parse(const std::string& text) {
  CycleType t;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size() || v <= 0) throw std::invalid_argument("bad cycle type: " + text);
    t.parts.push_back(v);
  }
  if (t.parts.empty()) throw std::invalid_argument("empty cycle type");
  std::sort(t.parts.rbegin(), t.parts.rend());
  return t;
}

namespace {
void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<CycleType>& out) {
  if (n == 0) {
    out.push_back(CycleType{cur});
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<CycleType> CycleType::all_of(int n) {
  if (n < 0) throw std::invalid_argument("negative n");
  std::vector<CycleType> out;
  std::vector<int> cur;
  partitions_rec(n, n == 0 ? 1 : n, cur, out);
  return out;
}

int CycleType::n() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string CycleType::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s;
}

uint64_t pack_perm(const std::vector<int>& images) {
  if (images.size() > 16) throw CapExceeded("packed permutations support degree <= 16");
  uint64_t out = 0;
  for (size_t x = 0; x < images.size(); ++x)
    out |= static_cast<uint64_t>(images[x]) << (4 * (15 - x));
  for (size_t x = images.size(); x < 16; ++x)
    out |= static_cast<uint64_t>(x) << (4 * (15 - x));
  return out;
}

std::vector<int> unpack_perm(uint64_t packed, int degree) {
  std::vector<int> im(static_cast<size_t>(degree));
  for (int x = 0; x < degree; ++x) im[static_cast<size_t>(x)] = packed_apply(packed, x);
  return im;
}

uint64_t packed_identity(int degree) {
  std::vector<int> im(static_cast<size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  return pack_perm(im);
}

uint64_t packed_inverse(uint64_t p, int degree) {
  uint64_t out = 0;
  for (int x = 0; x < degree; ++x)
    out |= static_cast<uint64_t>(x) << (4 * (15 - packed_apply(p, x)));
  for (int x = degree; x < 16; ++x) out |= static_cast<uint64_t>(x) << (4 * (15 - x));
  return out;
}

int packed_order(uint64_t p, int degree) {
  int ord = 1;
  for (int part : packed_cycle_type(p, degree).parts) ord = std::lcm(ord, part);
  return ord;
}

CycleType packed_cycle_type(uint64_t p, int degree) {
  CycleType t;
  uint32_t seen = 0;
  for (int s = 0; s < degree; ++s) {
    if (seen & (1u << s)) continue;
    int len = 0, x = s;
    do {
      seen |= 1u << x;
      x = packed_apply(p, x);
      ++len;
    } while (x != s);
    t.parts.push_back(len);
  }
  std::sort(t.parts.rbegin(), t.parts.rend());
  return t;
}

}  // namespace burnside
