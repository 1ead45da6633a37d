#include "cayleylab/montecarlo.hpp"

#include "cayleylab/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

namespace cayleylab {

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t mult0 = 0xD2511F53u, mult1 = 0xCD9E8D57u;
  constexpr std::uint32_t bump0 = 0x9E3779B9u, bump1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += bump0;
      key[1] += bump1;
    }
    const std::uint64_t prod0 = std::uint64_t(mult0) * counter[0];
    const std::uint64_t prod2 = std::uint64_t(mult1) * counter[2];
    counter = {std::uint32_t(prod2 >> 32) ^ counter[1] ^ key[0], std::uint32_t(prod2),
               std::uint32_t(prod0 >> 32) ^ counter[3] ^ key[1], std::uint32_t(prod0)};
  }
  return counter;
}

PhiloxRng::PhiloxRng(std::uint64_t seed, std::uint64_t stream)
    : key0_(std::uint32_t(seed)), key1_(std::uint32_t(seed >> 32)), stream_(stream) {}

void PhiloxRng::refill() {
  buffer_ = philox4x32({std::uint32_t(block_), std::uint32_t(block_ >> 32),
                        std::uint32_t(stream_), std::uint32_t(stream_ >> 32)},
                       {key0_, key1_});
  ++block_;
  cursor_ = 0;
}

std::uint32_t PhiloxRng::next_u32() {
  if (cursor_ == 4) refill();
  return buffer_[cursor_++];
}

std::uint64_t PhiloxRng::next_u64() {
  const std::uint64_t lo = next_u32();
  const std::uint64_t hi = next_u32();
  return (hi << 32) | lo;
}

std::uint64_t PhiloxRng::below(std::uint64_t bound) {
  if (bound == 0) throw precondition_error("PhiloxRng::below: bound must be >= 1");
  std::uint64_t x = next_u64();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
  std::uint64_t low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      x = next_u64();
      m = static_cast<unsigned __int128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

GeneratingSet sample_generating_set(const FiniteGroup& g, long k, PhiloxRng& rng) {
  const long n = g.order();
  if (k < 1 || k > n - 1)
    throw precondition_error("sample_generating_set: need 1 <= k <= n-1, got k=" +
                             std::to_string(k));
  std::vector<int> pool(n - 1);
  std::iota(pool.begin(), pool.end(), 1);
  for (long i = 0; i < k; ++i) {
    const long j = i + static_cast<long>(rng.below(std::uint64_t(n - 1 - i)));
    std::swap(pool[i], pool[j]);
  }
  GeneratingSet s;
  s.members.assign(pool.begin(), pool.begin() + k);
  std::sort(s.members.begin(), s.members.end());
  return s;
}

std::optional<int> diameter(const FiniteGroup& g, const GeneratingSet& s) {
  const long n = g.order();
  std::vector<int> dist(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  dist[0] = 0;
  queue.push_back(0);
  for (size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (int gen : s.members) {
      const int y = g.op(x, gen);
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  if (static_cast<long>(queue.size()) != n) return std::nullopt;
  return *std::max_element(dist.begin(), dist.end());
}

bool diam_greater_than_2(const FiniteGroup& g, const GeneratingSet& s) {
  const long n = g.order();
  thread_local std::vector<char> covered;
  covered.assign(n, 0);
  for (int a : s.members) covered[a] = 1;
  for (int a : s.members)
    for (int b : s.members) covered[g.op(a, b)] = 1;
  for (long y = 1; y < n; ++y)
    if (!covered[y]) return true;
  return false;
}

bool co_event(const FiniteGroup& g, int y, const GeneratingSet& s) {
  const long n = g.order();
  if (y < 1 || y >= n) throw precondition_error("co_event: need 1 <= y < order");
  thread_local std::vector<char> in_set;
  in_set.assign(n, 0);
  for (int a : s.members) in_set[a] = 1;
  // y itself may lie in S; the event concerns two-step products only.
  // in_set[0] is always false, so the degenerate witness a = y cannot fire.
  for (int a : s.members)
    if (in_set[g.op(g.inverse(a), y)]) return false;
  return true;
}

void wilson_interval(long hits, long trials, double& lo, double& hi) {
  if (trials <= 0 || hits < 0 || hits > trials)
    throw precondition_error("wilson_interval: need 0 <= hits <= trials, trials >= 1");
  constexpr double z = 1.96;
  const double zz = z * z;
  const double t = static_cast<double>(trials);
  const double phat = static_cast<double>(hits) / t;
  const double denom = 1.0 + zz / t;
  const double center = (phat + zz / (2.0 * t)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / t + zz / (4.0 * t * t)) / denom;
  // At the degenerate extremes the closed form gives exactly 0 or 1, but
  // floating-point evaluation can land one ulp inside, which would put
  // the point estimate outside its own interval. Pin the endpoints.
  lo = hits == 0 ? 0.0 : std::max(0.0, center - half);
  hi = hits == trials ? 1.0 : std::min(1.0, center + half);
}

namespace {

template <typename Event>
EstimateReport run_trials(const FiniteGroup& g, long k, long trials, std::uint64_t seed,
                          int threads, Event event) {
  if (trials < 1) throw precondition_error("estimate: need trials >= 1");
  const long n = g.order();
  if (k < 1 || k > n - 1) throw precondition_error("estimate: need 1 <= k <= n-1");
  threads = std::clamp(threads, 1, 64);
  std::vector<long> hits_by_thread(threads, 0);
  auto worker = [&](int which) {
    const long lo = trials * which / threads;
    const long hi = trials * (which + 1) / threads;
    long local = 0;
    for (long trial = lo; trial < hi; ++trial) {
      PhiloxRng rng(seed, static_cast<std::uint64_t>(trial));
      const GeneratingSet s = sample_generating_set(g, k, rng);
      if (event(s)) ++local;
    }
    hits_by_thread[which] = local;
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker, i);
    for (std::thread& th : pool) th.join();
  }
  EstimateReport report;
  report.trials = trials;
  report.hits = std::accumulate(hits_by_thread.begin(), hits_by_thread.end(), 0L);
  report.point = static_cast<double>(report.hits) / static_cast<double>(trials);
  report.seed = seed;
  wilson_interval(report.hits, report.trials, report.ci_low, report.ci_high);
  return report;
}

// Visits every k-subset of {1, ..., n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(long n, long k, Visit visit) {
  GeneratingSet s;
  s.members.resize(k);
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    s.members.assign(idx.begin(), idx.end());
    visit(s);
    long i = k - 1;
    while (i >= 0 && idx[i] == n - 1 - (k - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (long j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_exhaustive_budget(const FiniteGroup& g, long k) {
  const long n = g.order();
  if (k < 1 || k > n - 1) throw precondition_error("exhaustive: need 1 <= k <= n-1");
  if (binomial(n - 1, k) > 1000000)
    throw feasibility_error("exhaustive: C(n-1,k) exceeds 10^6 subsets");
}

}  // namespace

EstimateReport estimate_pr_diam_gt2(const FiniteGroup& g, long k, long trials,
                                    std::uint64_t seed, int threads) {
  return run_trials(g, k, trials, seed, threads,
                    [&](const GeneratingSet& s) { return diam_greater_than_2(g, s); });
}

EstimateReport estimate_coX(const FiniteGroup& g, int y, long k, long trials,
                            std::uint64_t seed, int threads) {
  if (y < 1 || y >= g.order()) throw precondition_error("estimate: need 1 <= y < order");
  return run_trials(g, k, trials, seed, threads,
                    [&](const GeneratingSet& s) { return co_event(g, y, s); });
}

ExactRatio exhaustive_pr_diam_gt2(const FiniteGroup& g, long k) {
  check_exhaustive_budget(g, k);
  BigInt hits = 0, total = 0;
  for_each_subset(g.order(), k, [&](const GeneratingSet& s) {
    ++total;
    if (diam_greater_than_2(g, s)) ++hits;
  });
  return ExactRatio(hits, total);
}

ExactRatio exhaustive_pr_coX(const FiniteGroup& g, int y, long k) {
  if (y < 1 || y >= g.order()) throw precondition_error("exhaustive: need 1 <= y < order");
  check_exhaustive_budget(g, k);
  BigInt hits = 0, total = 0;
  for_each_subset(g.order(), k, [&](const GeneratingSet& s) {
    ++total;
    if (co_event(g, y, s)) ++hits;
  });
  return ExactRatio(hits, total);
}

ExhaustiveBracketStats exhaustive_bracket_stats(const FiniteGroup& g, long k) {
  check_exhaustive_budget(g, k);
  const long n = g.order();
  BigInt total = 0, diam_hits = 0;
  std::vector<BigInt> cox_hits(n - 1, BigInt(0));
  std::vector<char> in_ss(n, 0);
  for_each_subset(n, k, [&](const GeneratingSet& s) {
    ++total;
    // One coverage pass: SS decides every coX(y); S u SS decides the
    // diameter event.
    std::fill(in_ss.begin(), in_ss.end(), 0);
    for (int a : s.members)
      for (int b : s.members) in_ss[g.op(a, b)] = 1;
    for (long y = 1; y < n; ++y)
      if (!in_ss[y]) ++cox_hits[y - 1];
    bool gt2 = false;
    thread_local std::vector<char> in_s;
    in_s.assign(n, 0);
    for (int a : s.members) in_s[a] = 1;
    for (long y = 1; y < n && !gt2; ++y)
      if (!in_ss[y] && !in_s[y]) gt2 = true;
    if (gt2) ++diam_hits;
  });
  ExhaustiveBracketStats stats;
  stats.pr_diam_gt2 = ExactRatio(diam_hits, total);
  stats.pr_coX.reserve(n - 1);
  for (long y = 1; y < n; ++y) stats.pr_coX.emplace_back(cox_hits[y - 1], total);
  return stats;
}

}  // namespace cayleylab
