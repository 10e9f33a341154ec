#include "combgraph/threshold.hpp"

#include <cmath>

namespace combgraph {

GuardedCmp guarded_ge(double lhs, double rhs) {
  GuardedCmp r;
  r.ge = lhs >= rhs;
  double scale = std::fmax(1.0, std::fmax(std::fabs(lhs), std::fabs(rhs)));
  r.boundary = std::fabs(lhs - rhs) <= 1e-9 * scale;
  return r;
}

bool count_meets_ratio23(std::int64_t count, int j, std::int64_t scale) {
  if (count < 0) return false;
  if (j <= 70 && scale <= (1LL << 40) && count <= (1LL << 40)) {
    // count * 3^j >= scale * 2^j, products fit in 128 bits for j <= 70.
    __int128 lhs = count;
    __int128 rhs = scale;
    for (int i = 0; i < j; ++i) {
      lhs *= 3;
      rhs *= 2;
    }
    return lhs >= rhs;
  }
  long double thr = static_cast<long double>(scale) *
                    std::pow(2.0L / 3.0L, static_cast<long double>(j));
  if (thr < 1.0L) return count >= 1;
  return static_cast<long double>(count) >= thr - 1e-9L;
}

int largest_ratio23_exponent(std::int64_t scale, double floor_value) {
  if (floor_value <= 0 || scale <= 0) return 0;
  int l = 0;
  long double cur = static_cast<long double>(scale);  // (2/3)^(l) * scale at l steps
  while (cur >= static_cast<long double>(floor_value) - 1e-9L) {
    ++l;
    cur = cur * 2.0L / 3.0L;
    if (l > 4096) break;  // threshold decays geometrically; unreachable in practice
  }
  return l;
}

}  // namespace combgraph
