#include <algorithm>
#include <vector>

#include "burnside/perm.hpp"
#include "doctest.h"

using namespace burnside;

namespace {
Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }
}  // namespace

TEST_CASE("composition applies the right factor first") {
  const Permutation p = perm({1, 0, 2});  // (0 1)
  const Permutation q = perm({0, 2, 1});  // (1 2)
  const Permutation pq = p * q;
  CHECK(pq(0) == 1);
  CHECK(pq(1) == 2);
  CHECK(pq(2) == 0);
  CHECK(pq.images() == std::vector<int>{1, 2, 0});
  // q * p moves the points the other way around; the two differ.
  CHECK((q * p).images() == std::vector<int>{2, 0, 1});
}

TEST_CASE("identity, inverse and order") {
  const Permutation id = Permutation::identity(4);
  CHECK(id.is_identity());
  CHECK(id.order() == 1);

  const Permutation c = perm({1, 2, 3, 0});  // 4-cycle
  CHECK(c.order() == 4);
  CHECK((c * c.inverse()).is_identity());
  CHECK((c.inverse() * c).is_identity());

  const Permutation d = perm({1, 0, 3, 2});  // two disjoint transpositions
  CHECK(d.order() == 2);
  const Permutation e = perm({1, 2, 0, 4, 3});  // 3-cycle times transposition
  CHECK(e.order() == 6);
}

TEST_CASE("cycle strings") {
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
  CHECK(perm({1, 0, 2}).to_cycle_string() == "(0 1)");
  CHECK(perm({1, 2, 0}).to_cycle_string() == "(0 1 2)");
  CHECK(perm({1, 0, 3, 2}).to_cycle_string() == "(0 1)(2 3)");
}

TEST_CASE("permutation constructor rejects non-bijections") {
  CHECK_THROWS_AS(perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perm({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(perm({-1, 0}), std::invalid_argument);
}

TEST_CASE("cycle types") {
  CHECK(CycleType::of(perm({1, 0, 2})).parts == std::vector<int>{2, 1});
  CHECK(CycleType::of(Permutation::identity(4)).parts == std::vector<int>{1, 1, 1, 1});
  CHECK(CycleType::of(perm({1, 2, 0, 4, 3})).parts == std::vector<int>{3, 2});

  const CycleType t = CycleType::parse("1,2");
  CHECK(t.parts == std::vector<int>{2, 1});
  CHECK(t.n() == 3);
  CHECK(t.to_string() == "2,1");

  // Partition counts of 0..6: 1, 1, 2, 3, 5, 7, 11.
  const std::vector<size_t> counts = {1, 1, 2, 3, 5, 7, 11};
  for (int n = 0; n <= 6; ++n) {
    const auto all = CycleType::all_of(n);
    CHECK(all.size() == counts[static_cast<size_t>(n)]);
    for (const CycleType& ct : all) {
      CHECK(ct.n() == n);
      CHECK(std::is_sorted(ct.parts.rbegin(), ct.parts.rend()));
    }
    // No duplicates.
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
}

TEST_CASE("packed representation round-trips and mirrors the object API") {
  const std::vector<Permutation> samples = {
      Permutation::identity(1),  perm({1, 0}),          perm({1, 2, 0}),
      perm({3, 2, 1, 0}),        perm({1, 0, 3, 2, 4}), perm({4, 0, 1, 2, 3}),
      perm({2, 3, 4, 5, 0, 1}),
  };
  for (const Permutation& p : samples) {
    const uint64_t packed = pack_perm(p);
    CHECK(unpack_perm(packed, p.degree()) == p.images());
    for (int x = 0; x < p.degree(); ++x) CHECK(packed_apply(packed, x) == p(x));
    CHECK(packed_order(packed, p.degree()) == p.order());
    CHECK(packed_cycle_type(packed, p.degree()) == CycleType::of(p));
    const uint64_t inv = packed_inverse(packed, p.degree());
    CHECK(unpack_perm(inv, p.degree()) == p.inverse().images());
  }
  // Composition agrees with the object route.
  const Permutation a = perm({2, 0, 1, 3});
  const Permutation b = perm({1, 3, 0, 2});
  CHECK(unpack_perm(packed_compose(pack_perm(a), pack_perm(b), 4), 4) == (a * b).images());
  CHECK(packed_identity(4) == pack_perm(Permutation::identity(4)));
}

TEST_CASE("packed numeric order equals lexicographic order on images") {
  std::vector<Permutation> all;
  std::vector<int> v = {0, 1, 2, 3};
  do {
    all.push_back(perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  // `all` is in lexicographic image order by construction.
  for (size_t i = 0; i + 1 < all.size(); ++i) {
    CHECK(pack_perm(all[i]) < pack_perm(all[i + 1]));
    CHECK(all[i] < all[i + 1]);
  }
}
