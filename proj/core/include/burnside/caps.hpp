#pragma once

#include <cstdint>

namespace burnside {

// Size guards. Exceeding any of them raises CapExceeded rather than grinding
// or exhausting memory. max_gset_points is sized for the chain sets of the
// degree-6 workloads (the largest has 151 680 points).
struct Caps {
  int64_t max_group_order = 5040;
  int64_t max_gset_points = 500000;
  int max_truncation = 7;
  int max_torus_n = 7;
};

}  // namespace burnside
