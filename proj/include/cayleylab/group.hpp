#pragma once

#include "cayleylab/numeric.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cayleylab {

// A finite group on elements {0, 1, ..., order-1} with 0 as the identity.
// Orders up to 256 are backed by a materialized multiplication table;
// larger groups evaluate products structurally. Copy is cheap (shared
// immutable state).
class FiniteGroup {
 public:
  struct Impl;  // implementation detail, defined in group.cpp

  long order() const;
  int op(int a, int b) const;
  int inverse(int a) const;
  // True when every non-identity element has order 2 (the group is Z2^d).
  bool elementary_abelian_2() const;
  const std::string& spec() const;

  // Full axiom check: identity, two-sided inverses, associativity.
  // Feasible only for order <= 256; throws feasibility_error above that
  // and precondition_error when an axiom fails.
  void verify_axioms() const;

  static FiniteGroup cyclic(long m);
  static FiniteGroup elem_abelian_2(int d);
  static FiniteGroup quaternion();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  // Flat row-major table; n*n entries, n <= 256, element 0 must be the
  // identity. The table is axiom-checked before acceptance.
  static FiniteGroup from_table(std::vector<int> table, std::string name = "table");

  // Grammar: factors separated by 'x'; each factor is Q8, Z<m>, or
  // Z<m>^<e> (e-fold product). Examples: "Z12", "Z2^5", "Q8xZ2^2".
  static FiniteGroup parse(std::string_view text);

 private:
  explicit FiniteGroup(std::shared_ptr<const Impl> impl);
  // Materializes a multiplication table behind the API when order <= 256.
  static FiniteGroup wrap(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// |sigma(y)| = #{x : x^2 = y}.
long square_root_count(const FiniteGroup& g, int y);

// max_{y != 0} |sigma(y)| / |G| as an exact ratio.
ExactRatio max_sqrt_ratio(const FiniteGroup& g);

// A family J of pairwise disjoint pairs {x, x^{-1} y} of non-identity
// elements, all pairs avoiding y itself; "members" lists the chosen x of
// each pair in construction order.
struct PairSetJ {
  int y = 0;
  std::vector<int> members;
};

// Greedy maximal family for arbitrary groups: walk candidates
// x in G* \ (sigma(y) u {y}) in index order, skipping any x whose pair
// would touch an already used element or satisfy x^2 = y. Guarantees
// |J| >= floor((n - 1 - |sigma(y)|) / 3).
PairSetJ build_disjoint_pair_set(const FiniteGroup& g, int y);

// For elementary abelian 2-groups: one representative per coset of
// {0, y}, skipping the coset {0, y} itself. Yields exactly (n-2)/2 pairs.
PairSetJ build_transversal_pair_set(const FiniteGroup& g, int y);

// Independent re-check of the pair-set invariants; true when J is valid.
bool verify_pair_set(const FiniteGroup& g, const PairSetJ& j);

// Deterministic test corpus: cyclic groups, elementary abelian 2-groups,
// Q8, Q8 x Z2^q, and pairwise direct products, all of order <= max_order,
// deduplicated by spec string.
std::vector<FiniteGroup> group_catalog(long max_order);

}  // namespace cayleylab
