#ifndef COMBGRAPH_THRESHOLD_HPP
#define COMBGRAPH_THRESHOLD_HPP

#include <cstdint>

namespace combgraph {

// Real-valued thresholds are evaluated in double precision. Comparisons of an
// exact integer cardinality against such a threshold carry a 1e-9 guard:
// values inside the guard band are classified by the plain comparison but
// flagged as boundary so callers can report them instead of silently trusting
// the classification.
struct GuardedCmp {
  bool ge = false;       // lhs >= rhs
  bool boundary = false; // |lhs - rhs| within the guard band
};

GuardedCmp guarded_ge(double lhs, double rhs);

// count >= (2/3)^j * scale, exact in integer arithmetic when the operands
// permit (j <= 70 and moderate magnitudes), guarded double otherwise.
bool count_meets_ratio23(std::int64_t count, int j, std::int64_t scale);

// Largest l >= 1 with (2/3)^(l-1) * scale >= floor_value, or 0 when even
// l = 1 fails. floor_value must be > 0.
int largest_ratio23_exponent(std::int64_t scale, double floor_value);

}  // namespace combgraph

#endif
