#include "theta/bounds.hpp"

#include <stdexcept>

namespace theta {

namespace {

BigInt ipow(BigInt base, long long exp) {
  BigInt out = 1;
  while (exp > 0) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

}  // namespace

BigInt ceil_pow2_root(long long p, long long q) {
  if (p < 0 || q < 1) throw std::invalid_argument("ceil_pow2_root needs p >= 0 and q >= 1");
  const BigInt target = BigInt(1) << p;
  BigInt lo = 1;
  BigInt hi = BigInt(1) << ((p + q - 1) / q);  // hi^q >= 2^p
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (ipow(mid, q) >= target) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

BigInt theorem5_bound(int r, int w, long long z) {
  if (r < 2 || w < 1) throw std::invalid_argument("theorem 5 bound needs r >= 2 and w >= 1");
  const long long p = z - 5LL * r;
  const long long q = 4LL * r * (2LL * w + 1);
  // For p <= 0 the real bound lies in (0, 1].
  if (p <= 0) return 1;
  return ceil_div(ceil_pow2_root(p, q), r - 1);
}

int grouping_radius(int r, long long z) {
  if (z < r) return 0;
  return static_cast<int>((z - r) / (4LL * r));
}

BigInt theorem4_bound(int r, int delta, long long z) {
  if (r < 2) throw std::invalid_argument("theorem 4 bound needs r >= 2");
  const int d = grouping_radius(r, z);
  const BigInt factor = BigInt(delta / (r - 1) - 1);
  const BigInt numerator = BigInt(delta - 2 * r + 3) * ipow(factor, d);
  if (numerator <= 0) return 0;
  return ceil_div(numerator, r - 1);
}

}  // namespace theta
