#include "cayleylab/bounds.hpp"

#include <string>

namespace cayleylab {

namespace {

DiameterBoundReport assemble(long n, long k, long t_used, ExactRatio p, ExactRatio raw_lower,
                             ExactRatio raw_upper, BoundRegime regime) {
  DiameterBoundReport report;
  report.n = n;
  report.k = k;
  report.t_used = t_used;
  report.p_value = std::move(p);
  report.raw_lower = std::move(raw_lower);
  report.raw_upper = std::move(raw_upper);
  report.lower = report.raw_lower < 0 ? ExactRatio(0) : report.raw_lower;
  report.upper = report.raw_upper > 1 ? ExactRatio(1) : report.raw_upper;
  report.regime = regime;
  return report;
}

void check_nk(const char* who, long n, long k, long n_min) {
  if (n < n_min)
    throw precondition_error(std::string(who) + ": need n >= " + std::to_string(n_min) +
                             ", got n=" + std::to_string(n));
  if (k < 1 || k > n - 1)
    throw precondition_error(std::string(who) + ": need 1 <= k <= n-1, got k=" +
                             std::to_string(k));
}

}  // namespace

ExactRatio theorem1_upper(long n, long k) {
  check_nk("theorem1_upper", n, k, 4);
  return ExactRatio(n - 1) * p_incl_excl(n, k, (n - 4) / 12);
}

DiameterBoundReport theorem1_report(long n, long k) {
  check_nk("theorem1_report", n, k, 4);
  return theorem1_report(n, k, (n - 4) / 12);
}

DiameterBoundReport theorem1_report(long n, long k, long t_used) {
  check_nk("theorem1_report", n, k, 4);
  const ExactRatio p = p_incl_excl(n, k, t_used);
  return assemble(n, k, t_used, p, ExactRatio(0), ExactRatio(n - 1) * p, BoundRegime::general);
}

DiameterBoundReport theorem2_bounds(int d, long k) {
  if (d < 1 || d > 22)
    throw precondition_error("theorem2_bounds: need 1 <= d <= 22, got d=" + std::to_string(d));
  const long n = 1L << d;
  check_nk("theorem2_bounds", n, k, 2);
  const long t = (n - 2) / 2;
  const ExactRatio p = p_incl_excl(n, k, t);
  return assemble(n, k, t, p, p - ExactRatio(k, n - 1), ExactRatio(n - 1) * p,
                  BoundRegime::elem_abelian_2);
}

ExactRatio lemma1_bound(const FiniteGroup& g, int y, long k) {
  const long n = g.order();
  check_nk("lemma1_bound", n, k, 2);
  const PairSetJ j = build_disjoint_pair_set(g, y);
  return p_incl_excl(n, k, static_cast<long>(j.members.size()));
}

std::pair<ExactRatio, ExactRatio> generic_bracket(const ExactRatio& m, long n, long k) {
  if (m < 0 || m > 1) throw precondition_error("generic_bracket: need 0 <= M <= 1");
  check_nk("generic_bracket", n, k, 2);
  return {m - ExactRatio(k, n - 1), ExactRatio(n - 1) * m};
}

}  // namespace cayleylab
