#pragma once

#include "theta/bigint.hpp"

namespace theta {

/// Smallest integer y with y^q >= 2^p (p >= 0, q >= 1).
BigInt ceil_pow2_root(long long p, long long q);

/// ⌈(1/(r−1))·2^{(z−5r)/(4r(2w+1))}⌉, computed exactly. At least 1.
BigInt theorem5_bound(int r, int w, long long z);

/// ⌈(δ−2r+3)·(⌊δ/(r−1)⌋−1)^d / (r−1)⌉ with d = ⌊(z−r)/(4r)⌋.
BigInt theorem4_bound(int r, int delta, long long z);

/// d = ⌊(z−r)/(4r)⌋, clamped at 0.
int grouping_radius(int r, long long z);

}  // namespace theta
