#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "combgraph/errors.hpp"
#include "combgraph/lemma.hpp"

namespace combgraph {

namespace {

// Both length inequalities at L, with K = 2 so 3 + (9/2)K = 12.
bool length_inequalities_hold(long double L, double d, double c0) {
  long double r8 = powl(L, 1.0L / 8.0L);
  long double r4 = powl(L, 0.25L);
  long double r2 = sqrtl(L);
  bool first = r4 >= 12.0L * r8 + 3.0L + static_cast<long double>(c0);
  bool second = L - 2.0L * r8 * (1.0L + powl(2.0L, static_cast<long double>(d)) + r4) >= r2;
  return first && second;
}

}  // namespace

LemmaConstants compute_constants(int k, double d) {
  if (k < 2) throw PreconditionError("compute_constants: need k >= 2");
  if (d < 2) throw PreconditionError("compute_constants: need d >= 2");
  LemmaConstants c;
  c.k_sum = 2.0;  // geometric series (2/3)/(1 - 2/3)
  c.c0 = 6.0 * (std::sqrt(2.0) + std::sqrt(3.0));

  // Both predicates are monotone once true, so bracket then bisect for the
  // first integer where they hold.
  std::int64_t hi = 16;
  while (!length_inequalities_hold(static_cast<long double>(hi), d, c.c0)) {
    hi *= 2;
    if (hi > (1LL << 60)) throw Error("compute_constants: L0 bracket exceeded 2^60");
  }
  std::int64_t lo = hi / 2;  // fails (or hi == 16 and lo may also hold; fix below)
  while (lo > 1 && length_inequalities_hold(static_cast<long double>(lo), d, c.c0)) lo /= 2;
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (length_inequalities_hold(static_cast<long double>(mid), d, c.c0)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  c.l0 = hi;

  c.tau_root_a = 1.0 / (2.0 * d * (d + 2.0));
  c.tau_root_c = 1.0 / (16.0 * d);
  // Third inequality: l0^(-d-1/2+2d tau) + c0 l0^(-1/2+2d tau) + 2^(-1/2) < 1,
  // increasing in tau; bisect the equality point.
  auto excess = [&](long double tau) {
    long double lg = logl(static_cast<long double>(c.l0));
    long double t1 = expl((-static_cast<long double>(d) - 0.5L + 2.0L * d * tau) * lg);
    long double t2 = static_cast<long double>(c.c0) * expl((-0.5L + 2.0L * d * tau) * lg);
    return t1 + t2 + 1.0L / sqrtl(2.0L) - 1.0L;
  };
  long double blo = 0.0L, bhi = 1.0L / (4.0L * d);
  if (excess(blo) >= 0) {
    c.tau_root_b = 0;
  } else {
    while (bhi - blo > 1e-12L) {
      long double mid = (blo + bhi) / 2;
      if (excess(mid) < 0) {
        blo = mid;
      } else {
        bhi = mid;
      }
    }
    c.tau_root_b = static_cast<double>(blo);
  }
  c.tau0 = std::min({c.tau_root_a, c.tau_root_b, c.tau_root_c});
  return c;
}

int d_s_exponent(int s) {
  if (s < 1) throw PreconditionError("d_s: need s >= 1");
  return 5 * s - 3;  // 2^(s-1) * 4^(2s-1) = 2^(5s-3)
}

std::uint64_t d_s(int s) {
  int e = d_s_exponent(s);
  if (e > 63) throw std::overflow_error("d_s: 2^" + std::to_string(e) + " exceeds 64 bits");
  return 1ULL << e;
}

std::string d_s_decimal(int s) {
  int e = d_s_exponent(s);
  std::string digits = "1";  // little-endian decimal
  for (int i = 0; i < e; ++i) {
    int carry = 0;
    for (auto& ch : digits) {
      int v = (ch - '0') * 2 + carry;
      ch = static_cast<char>('0' + v % 10);
      carry = v / 10;
    }
    if (carry) digits.push_back(static_cast<char>('0' + carry));
  }
  return {digits.rbegin(), digits.rend()};
}

BaseDims base_remark_dimensions(std::uint64_t t) {
  if (t < 4) throw PreconditionError("base_remark_dimensions: need t >= 4");
  int s = 1;
  while (d_s_exponent(s + 1) <= 63 && d_s(s + 1) <= t) ++s;
  BaseDims dims;
  dims.s = s;
  dims.length = 1ULL << s;
  dims.divisor = d_s(s);
  // 2^s >= t^(1/10) and D_s <= t always hold here; keep them as hard checks.
  if (!(dims.divisor <= t)) throw Error("base_remark_dimensions: divisor check failed");
  if (std::pow(2.0L, static_cast<long double>(s)) <
      powl(static_cast<long double>(t), 0.1L) - 1e-9L) {
    throw Error("base_remark_dimensions: length check failed");
  }
  return dims;
}

}  // namespace combgraph
