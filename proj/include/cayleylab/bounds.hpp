#pragma once

#include "cayleylab/combinatorics.hpp"
#include "cayleylab/group.hpp"
#include "cayleylab/numeric.hpp"

#include <utility>

namespace cayleylab {

enum class BoundRegime { general, elem_abelian_2 };

// Two-sided probability bracket for Pr[diam(Cay(G,S)) > 2]. Raw values are
// the unclamped expressions (needed for rate regressions; the raw upper may
// exceed 1 and the raw lower may be negative); lower/upper are clamped to
// [0,1] for probability semantics.
struct DiameterBoundReport {
  long n = 0;
  long k = 0;
  long t_used = 0;
  ExactRatio p_value;
  ExactRatio raw_lower;
  ExactRatio raw_upper;
  ExactRatio lower;  // max(raw_lower, 0)
  ExactRatio upper;  // min(raw_upper, 1)
  BoundRegime regime = BoundRegime::general;
};

// General upper bound (n-1) * p(n, k, floor((n-4)/12)), unclamped.
// Requires n >= 4 (t would be negative below that) and 1 <= k <= n-1.
ExactRatio theorem1_upper(long n, long k);

// Full report for the general regime; lower bound is the trivial 0.
// The t parameter is overridable for experimentation; the default follows
// the floor((n-4)/12) rule.
DiameterBoundReport theorem1_report(long n, long k);
DiameterBoundReport theorem1_report(long n, long k, long t_used);

// Two-sided bound for Z2^d (order n = 2^d, d >= 1), t = (n-2)/2:
//   p - k/(n-1)  <=  Pr[diam > 2]  <=  (n-1) p.
DiameterBoundReport theorem2_bounds(int d, long k);

// Upper bound on the single-target miss probability Pr[y not in SS]:
// p(n, k, |J|) with J the greedy disjoint-pair family for y.
ExactRatio lemma1_bound(const FiniteGroup& g, int y, long k);

// The bracket (M - k/(n-1), (n-1) M) around Pr[diam > 2] built from
// M = max_y Pr[y not in SS]; unclamped. Requires 0 <= M <= 1.
std::pair<ExactRatio, ExactRatio> generic_bracket(const ExactRatio& m, long n, long k);

}  // namespace cayleylab
