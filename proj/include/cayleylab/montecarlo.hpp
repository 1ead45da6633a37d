#pragma once

#include "cayleylab/group.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace cayleylab {

// Philox4x32-10 block function, exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// Counter-based stream of uniform words: every draw is a pure function of
// (seed, stream, position), so trial i can be regenerated on any thread
// with no shared state. Stream = trial index by convention.
class PhiloxRng {
 public:
  PhiloxRng(std::uint64_t seed, std::uint64_t stream);
  std::uint32_t next_u32();
  std::uint64_t next_u64();
  // Uniform integer in [0, bound), bound >= 1 (Lemire multiply-shift with
  // rejection, bias-free).
  std::uint64_t below(std::uint64_t bound);

 private:
  void refill();
  std::uint32_t key0_, key1_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int cursor_ = 4;
};

// Sorted distinct non-identity elements.
struct GeneratingSet {
  std::vector<int> members;
};

// Uniform k-subset of G* = {1, ..., n-1} by partial Fisher-Yates.
// Requires 1 <= k <= n-1.
GeneratingSet sample_generating_set(const FiniteGroup& g, long k, PhiloxRng& rng);

// Directed diameter of Cay(G, S) by BFS from the identity (the graph is
// vertex-transitive). Empty optional when S does not generate G.
std::optional<int> diameter(const FiniteGroup& g, const GeneratingSet& s);

// True iff some y in G* lies outside S u SS; equivalent to diameter > 2
// (including the disconnected case). O(k^2 + n), no BFS.
bool diam_greater_than_2(const FiniteGroup& g, const GeneratingSet& s);

// The per-target miss event: y is not a product of two generators
// (y in S itself is allowed and does not decide the event).
bool co_event(const FiniteGroup& g, int y, const GeneratingSet& s);

struct EstimateReport {
  long trials = 0;
  long hits = 0;
  double point = 0.0;
  double ci_low = 0.0;   // Wilson 95%, z = 1.96
  double ci_high = 0.0;
  std::uint64_t seed = 0;
};

// 95% Wilson score interval for hits/trials with z = 1.96.
void wilson_interval(long hits, long trials, double& lo, double& hi);

// Monte Carlo estimate of Pr[diam(Cay(G,S)) > 2] over uniform k-subsets.
// Deterministic in (seed, trials) regardless of threads.
EstimateReport estimate_pr_diam_gt2(const FiniteGroup& g, long k, long trials,
                                    std::uint64_t seed, int threads = 1);

// Monte Carlo estimate of Pr[y not in SS] for a fixed y in G*.
EstimateReport estimate_coX(const FiniteGroup& g, int y, long k, long trials,
                            std::uint64_t seed, int threads = 1);

// Exact probabilities by enumerating all C(n-1, k) subsets; guarded to
// C(n-1, k) <= 10^6 (feasibility_error beyond).
ExactRatio exhaustive_pr_diam_gt2(const FiniteGroup& g, long k);
ExactRatio exhaustive_pr_coX(const FiniteGroup& g, int y, long k);

// One-pass enumeration collecting Pr[diam > 2] together with Pr[y not in
// SS] for every y in G* (pr_coX[y-1] holds target y). Same guard as the
// other exhaustive routines.
struct ExhaustiveBracketStats {
  ExactRatio pr_diam_gt2;
  std::vector<ExactRatio> pr_coX;
};
ExhaustiveBracketStats exhaustive_bracket_stats(const FiniteGroup& g, long k);

}  // namespace cayleylab
