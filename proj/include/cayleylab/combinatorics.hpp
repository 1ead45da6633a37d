#pragma once

#include "cayleylab/numeric.hpp"

namespace cayleylab {

// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);

// Falling factorial (r)_l = r (r-1) ... (r-l+1). Requires r, l >= 0.
BigInt falling_factorial(long r, long l);

// p(n, k, t): probability that a fixed family of t disjoint pair events
// all miss a uniform k-subset of an (n-1)-element ground set, by
// inclusion-exclusion:
//
//   p(n,k,t) = sum_{i=0}^{t} (-1)^i C(t,i) (k)_{2i} / (n-1)_{2i}
//
// Requires n >= 2, 0 <= k <= n-1, 0 <= t and 2t <= n-1.
ExactRatio p_incl_excl(long n, long k, long t);

// a(n, k, t) = [y^k] (1+y)^(n-2t) (1+2y)^t, the number of k-subsets of an
// n-element ground set avoiding all t disjoint pairs, computed from the
// generating-function expansion
//
//   a(n,k,t) = sum_j C(t,j) 2^j C(n-2t, k-j).
//
// Requires n >= 0, 0 <= k <= n, 0 <= t and 2t <= n.
BigInt a_coeff_extract(long n, long k, long t);

// Closed form for the fully paired odd case a(2t+1, k, t):
//   2^k C(t,k) + 2^(k-1) C(t,k-1).
// Requires t >= 0, 0 <= k <= 2t+1.
BigInt a_abelian_closed(long t, long k);

// Exhaustive subset enumeration of the same count; cross-validation
// oracle only. Requires the ranges of a_coeff_extract and n <= 24.
BigInt a_bruteforce(long n, long k, long t);

// p(n, k, t) recomputed through the subset-count route:
//   p = a(n-1, k, t) / C(n-1, k).
// Same preconditions as p_incl_excl.
ExactRatio p_from_a(long n, long k, long t);

}  // namespace cayleylab
