#include "cayleylab/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace cayleylab {

namespace {
constexpr long kMaxStructuredOrder = 1L << 22;
constexpr long kMaxTableOrder = 256;
}  // namespace

struct FiniteGroup::Impl {
  long n;
  std::string name;
  Impl(long n_, std::string name_) : n(n_), name(std::move(name_)) {}
  virtual ~Impl() = default;
  virtual int op(int a, int b) const = 0;
  virtual int inv(int a) const = 0;
  virtual bool ea2() const = 0;
};

namespace {

using ImplPtr = std::shared_ptr<const FiniteGroup::Impl>;

struct CyclicImpl final : FiniteGroup::Impl {
  long m;
  explicit CyclicImpl(long m_) : Impl(m_, "Z" + std::to_string(m_)), m(m_) {}
  int op(int a, int b) const override { return static_cast<int>((a + long(b)) % m); }
  int inv(int a) const override { return a == 0 ? 0 : static_cast<int>(m - a); }
  bool ea2() const override { return m <= 2; }
};

struct XorImpl final : FiniteGroup::Impl {
  explicit XorImpl(int d) : Impl(1L << d, "Z2^" + std::to_string(d)) {}
  int op(int a, int b) const override { return a ^ b; }
  int inv(int a) const override { return a; }
  bool ea2() const override { return true; }
};

struct ProductImpl final : FiniteGroup::Impl {
  ImplPtr lhs, rhs;  // element e encodes (a, b) as a * rhs->n + b
  ProductImpl(ImplPtr l, ImplPtr r)
      : Impl(l->n * r->n, l->name + "x" + r->name), lhs(std::move(l)), rhs(std::move(r)) {}
  int op(int a, int b) const override {
    const long nb = rhs->n;
    const int left = lhs->op(static_cast<int>(a / nb), static_cast<int>(b / nb));
    const int right = rhs->op(static_cast<int>(a % nb), static_cast<int>(b % nb));
    return static_cast<int>(left * nb + right);
  }
  int inv(int a) const override {
    const long nb = rhs->n;
    return static_cast<int>(lhs->inv(static_cast<int>(a / nb)) * nb +
                            rhs->inv(static_cast<int>(a % nb)));
  }
  bool ea2() const override { return lhs->ea2() && rhs->ea2(); }
};

// Q8 on indices 2u+s with u in {0:1, 1:i, 2:j, 3:k} and s the sign bit.
int quat_mul(int x, int y) {
  const int ux = x >> 1, sx = x & 1;
  const int uy = y >> 1, sy = y & 1;
  int s = sx ^ sy;
  int u;
  if (ux == 0) {
    u = uy;
  } else if (uy == 0) {
    u = ux;
  } else if (ux == uy) {
    u = 0;
    s ^= 1;  // i^2 = j^2 = k^2 = -1
  } else {
    u = 6 - ux - uy;  // the remaining imaginary unit
    const bool cyclic_order = (uy - ux + 3) % 3 == 1;  // ij=k, jk=i, ki=j
    if (!cyclic_order) s ^= 1;
  }
  return (u << 1) | s;
}

struct TableImpl final : FiniteGroup::Impl {
  std::vector<std::uint16_t> mul;
  std::vector<std::uint16_t> inverse;
  bool ea2_flag = false;

  TableImpl(long n_, std::string name_, std::vector<std::uint16_t> table)
      : Impl(n_, std::move(name_)), mul(std::move(table)) {
    index_table();
  }
  // Materializes any other implementation.
  explicit TableImpl(const Impl& src) : Impl(src.n, src.name) {
    mul.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        mul[static_cast<size_t>(a) * n + b] = static_cast<std::uint16_t>(src.op(a, b));
    index_table();
  }

  void index_table() {
    inverse.assign(n, 0);
    ea2_flag = true;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (mul[static_cast<size_t>(a) * n + b] == 0) {
          inverse[a] = static_cast<std::uint16_t>(b);
          break;
        }
      }
      if (mul[static_cast<size_t>(a) * n + a] != 0) ea2_flag = false;
    }
  }

  int op(int a, int b) const override { return mul[static_cast<size_t>(a) * n + b]; }
  int inv(int a) const override { return inverse[a]; }
  bool ea2() const override { return ea2_flag; }
};

long parse_long(std::string_view text, std::string_view whole) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw precondition_error("parse: bad number in group spec '" + std::string(whole) + "'");
  return value;
}

}  // namespace

FiniteGroup::FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

FiniteGroup FiniteGroup::wrap(std::shared_ptr<const Impl> impl) {
  if (impl->n <= kMaxTableOrder && dynamic_cast<const TableImpl*>(impl.get()) == nullptr)
    impl = std::make_shared<TableImpl>(*impl);
  return FiniteGroup(std::move(impl));
}

long FiniteGroup::order() const { return impl_->n; }
int FiniteGroup::op(int a, int b) const { return impl_->op(a, b); }
int FiniteGroup::inverse(int a) const { return impl_->inv(a); }
bool FiniteGroup::elementary_abelian_2() const { return impl_->ea2(); }
const std::string& FiniteGroup::spec() const { return impl_->name; }

FiniteGroup FiniteGroup::cyclic(long m) {
  if (m < 1 || m > kMaxStructuredOrder)
    throw precondition_error("cyclic: need 1 <= m <= 2^22, got m=" + std::to_string(m));
  return wrap(std::make_shared<CyclicImpl>(m));
}

FiniteGroup FiniteGroup::elem_abelian_2(int d) {
  if (d < 0 || (1L << d) > kMaxStructuredOrder)
    throw precondition_error("elem_abelian_2: need 0 <= d <= 22, got d=" + std::to_string(d));
  if (d <= 1) return cyclic(d == 0 ? 1 : 2);  // canonical names Z1, Z2
  return wrap(std::make_shared<XorImpl>(d));
}

FiniteGroup FiniteGroup::quaternion() {
  std::vector<std::uint16_t> table(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) table[a * 8 + b] = static_cast<std::uint16_t>(quat_mul(a, b));
  return FiniteGroup(std::make_shared<TableImpl>(8, "Q8", std::move(table)));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() > kMaxStructuredOrder / b.order())
    throw feasibility_error("direct_product: combined order exceeds 2^22");
  return wrap(std::make_shared<ProductImpl>(a.impl_, b.impl_));
}

FiniteGroup FiniteGroup::from_table(std::vector<int> table, std::string name) {
  long n = 0;
  while (n * n < static_cast<long>(table.size())) ++n;
  if (n * n != static_cast<long>(table.size()) || n == 0)
    throw precondition_error("from_table: table size must be a positive perfect square");
  if (n > kMaxTableOrder)
    throw feasibility_error("from_table: tables capped at order 256, got " + std::to_string(n));
  std::vector<std::uint16_t> entries(table.size());
  for (size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0 || table[i] >= n)
      throw precondition_error("from_table: entry out of range at index " + std::to_string(i));
    entries[i] = static_cast<std::uint16_t>(table[i]);
  }
  FiniteGroup g(std::make_shared<TableImpl>(n, std::move(name), std::move(entries)));
  g.verify_axioms();
  return g;
}

void FiniteGroup::verify_axioms() const {
  const long n = order();
  if (n > kMaxTableOrder)
    throw feasibility_error("verify_axioms: full check capped at order 256, got " +
                            std::to_string(n));
  for (int x = 0; x < n; ++x) {
    if (op(0, x) != x || op(x, 0) != x)
      throw precondition_error(spec() + ": element 0 is not a two-sided identity");
    const int y = inverse(x);
    if (op(x, y) != 0 || op(y, x) != 0)
      throw precondition_error(spec() + ": element " + std::to_string(x) +
                               " lacks a two-sided inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = op(a, b);
      for (int c = 0; c < n; ++c)
        if (op(ab, c) != op(a, op(b, c)))
          throw precondition_error(spec() + ": associativity fails at (" + std::to_string(a) +
                                   "," + std::to_string(b) + "," + std::to_string(c) + ")");
    }
}

FiniteGroup FiniteGroup::parse(std::string_view text) {
  std::vector<std::string_view> tokens;
  size_t start = 0;
  std::string cleaned(text);
  cleaned.erase(std::remove(cleaned.begin(), cleaned.end(), ' '), cleaned.end());
  if (cleaned.empty()) throw precondition_error("parse: empty group spec");
  for (size_t i = 0; i <= cleaned.size(); ++i) {
    if (i == cleaned.size() || cleaned[i] == 'x' || cleaned[i] == 'X') {
      if (i == start) throw precondition_error("parse: empty factor in '" + cleaned + "'");
      tokens.emplace_back(cleaned.data() + start, i - start);
      start = i + 1;
    }
  }
  std::vector<FiniteGroup> factors;
  for (std::string_view tok : tokens) {
    if (tok == "Q8" || tok == "q8") {
      factors.push_back(quaternion());
      continue;
    }
    if (tok.front() != 'Z' && tok.front() != 'z')
      throw precondition_error("parse: unrecognized factor '" + std::string(tok) + "'");
    std::string_view body = tok.substr(1);
    long m = 0, e = 1;
    if (const size_t caret = body.find('^'); caret != std::string_view::npos) {
      m = parse_long(body.substr(0, caret), text);
      e = parse_long(body.substr(caret + 1), text);
    } else {
      m = parse_long(body, text);
    }
    if (m < 1 || e < 1)
      throw precondition_error("parse: need m >= 1 and e >= 1 in '" + std::string(tok) + "'");
    if (m == 2) {
      factors.push_back(elem_abelian_2(static_cast<int>(e)));
    } else {
      FiniteGroup acc = cyclic(m);
      for (long i = 1; i < e; ++i) acc = direct_product(acc, cyclic(m));
      factors.push_back(acc);
    }
  }
  FiniteGroup result = factors.front();
  for (size_t i = 1; i < factors.size(); ++i) result = direct_product(result, factors[i]);
  return result;
}

long square_root_count(const FiniteGroup& g, int y) {
  const long n = g.order();
  if (y < 0 || y >= n)
    throw precondition_error("square_root_count: y out of range");
  long count = 0;
  for (int x = 0; x < n; ++x)
    if (g.op(x, x) == y) ++count;
  return count;
}

ExactRatio max_sqrt_ratio(const FiniteGroup& g) {
  const long n = g.order();
  if (n < 2) throw precondition_error("max_sqrt_ratio: needs order >= 2");
  std::vector<long> counts(n, 0);
  for (int x = 0; x < n; ++x) ++counts[g.op(x, x)];
  long best = 0;
  for (int y = 1; y < n; ++y) best = std::max(best, counts[y]);
  return ExactRatio(best, n);
}

PairSetJ build_disjoint_pair_set(const FiniteGroup& g, int y) {
  const long n = g.order();
  if (y < 1 || y >= n)
    throw precondition_error("build_disjoint_pair_set: need 1 <= y < order");
  std::vector<char> in_sigma(n, 0);
  for (int x = 0; x < n; ++x)
    if (g.op(x, x) == y) in_sigma[x] = 1;
  std::vector<char> used(n, 0);
  PairSetJ j;
  j.y = y;
  for (int x = 1; x < n; ++x) {
    if (x == y || in_sigma[x] || used[x]) continue;
    const int partner = g.op(g.inverse(x), y);
    if (used[partner]) continue;
    used[x] = used[partner] = 1;
    j.members.push_back(x);
  }
  return j;
}

PairSetJ build_transversal_pair_set(const FiniteGroup& g, int y) {
  const long n = g.order();
  if (!g.elementary_abelian_2())
    throw precondition_error("build_transversal_pair_set: group must be Z2^d");
  if (y < 1 || y >= n)
    throw precondition_error("build_transversal_pair_set: need 1 <= y < order");
  std::vector<char> seen(n, 0);
  PairSetJ j;
  j.y = y;
  for (int x = 1; x < n; ++x) {
    if (x == y || seen[x]) continue;
    seen[x] = seen[g.op(x, y)] = 1;
    j.members.push_back(x);
  }
  return j;
}

bool verify_pair_set(const FiniteGroup& g, const PairSetJ& j) {
  const long n = g.order();
  if (j.y < 1 || j.y >= n) return false;
  std::vector<char> seen(n, 0);
  for (int x : j.members) {
    if (x < 1 || x >= n || x == j.y) return false;
    if (g.op(x, x) == j.y) return false;  // pair would collapse to one element
    const int partner = g.op(g.inverse(x), j.y);
    if (partner == 0 || partner == j.y) return false;
    if (seen[x] || seen[partner]) return false;
    seen[x] = seen[partner] = 1;
  }
  return true;
}

std::vector<FiniteGroup> group_catalog(long max_order) {
  if (max_order < 2)
    throw precondition_error("group_catalog: need max_order >= 2");
  std::vector<FiniteGroup> base;
  for (long m = 2; m <= std::min<long>(64, max_order); ++m) base.push_back(FiniteGroup::cyclic(m));
  for (int d = 2; d <= 8 && (1L << d) <= max_order; ++d)
    base.push_back(FiniteGroup::elem_abelian_2(d));
  if (max_order >= 8) base.push_back(FiniteGroup::quaternion());

  std::vector<FiniteGroup> all = base;
  for (int q = 1; q <= 4 && (8L << q) <= max_order; ++q)
    all.push_back(FiniteGroup::direct_product(FiniteGroup::quaternion(),
                                              FiniteGroup::elem_abelian_2(q)));
  for (size_t i = 0; i < base.size(); ++i)
    for (size_t k = i; k < base.size(); ++k)
      if (base[i].order() <= max_order / base[k].order())
        all.push_back(FiniteGroup::direct_product(base[i], base[k]));

  std::vector<FiniteGroup> out;
  std::set<std::string> seen;
  for (const FiniteGroup& g : all)
    if (seen.insert(g.spec()).second) out.push_back(g);
  return out;
}

}  // namespace cayleylab
