#pragma once

namespace f2mzv {

double const_pi();

/// log 2 summed as 2*atanh(1/3).
double const_log2();

/// zeta(k) for k >= 2: direct sum to M-1 plus the Euler-Maclaurin tail
/// M^{1-k}/(k-1) + M^{-k}/2. Memoized; relative error <= 1e-14.
double const_zeta(int k);

} // namespace f2mzv
