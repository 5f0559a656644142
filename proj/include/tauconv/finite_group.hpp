#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tauconv {

/// Outcome of one axiom check, with the first counterexample when it fails.
struct AxiomResult {
  std::string axiom;
  bool pass = true;
  std::array<int, 3> witness{-1, -1, -1};
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomResult> axioms;
  bool ok() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.pass; });
  }
  /// First failing axiom, formatted; empty when everything passed.
  std::string first_failure() const {
    for (const auto& a : axioms)
      if (!a.pass) {
        std::ostringstream os;
        os << a.axiom << " fails at (" << a.witness[0] << "," << a.witness[1] << ","
           << a.witness[2] << ")";
        if (!a.detail.empty()) os << ": " << a.detail;
        return os.str();
      }
    return {};
  }
};

/// Thrown when an input fails validation that construction requires.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, ValidationReport rep)
      : std::runtime_error(what), report(std::move(rep)) {}
  ValidationReport report;
};

/// A finite group on dense indices 0..n-1 with a materialized Cayley table.
/// Immutable after construction; Haar measure is counting measure.
class FiniteGroup {
 public:
  /// Structural errors (non-square table, out-of-range entries) throw;
  /// axiom violations do not -- run validate_group to get witnesses.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& rows,
                                std::string label = "");

  /// Z_n, elements = residues in ascending order.
  static FiniteGroup cyclic(int n);

  /// D_n of order 2n: indices 0..n-1 are rotations r^i, n..2n-1 are r^(i-n) s.
  static FiniteGroup dihedral(int n);

  /// S_n for n <= 6, elements = permutations in lexicographic one-line order,
  /// composed as (a.b)(x) = a(b(x)).
  static FiniteGroup symmetric(int n);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return cayley_[static_cast<size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[static_cast<size_t>(a)]; }
  const std::vector<int32_t>& table() const { return cayley_; }
  const std::string& label() const { return label_; }

  bool abelian() const {
    for (int a = 0; a < order_; ++a)
      for (int b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// True iff the table is exactly the ascending-residue table of Z_n.
  bool is_cyclic_canonical() const {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        if (mul(a, b) != (a + b) % order_) return false;
    return true;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.cayley_ == b.cayley_;
  }
  friend bool operator!=(const FiniteGroup& a, const FiniteGroup& b) { return !(a == b); }

 private:
  FiniteGroup() = default;
  void derive_identity_and_inverses();

  int order_ = 0;
  int identity_ = -1;  // -1 when the table has no two-sided identity
  std::vector<int32_t> cayley_;
  std::vector<int32_t> inverse_;
  std::string label_;
};

inline void FiniteGroup::derive_identity_and_inverses() {
  identity_ = -1;
  for (int e = 0; e < order_; ++e) {
    bool id = true;
    for (int x = 0; x < order_ && id; ++x) id = mul(e, x) == x && mul(x, e) == x;
    if (id) {
      identity_ = e;
      break;
    }
  }
  inverse_.assign(order_, -1);
  if (identity_ < 0) return;
  for (int x = 0; x < order_; ++x)
    for (int y = 0; y < order_; ++y)
      if (mul(x, y) == identity_ && mul(y, x) == identity_) {
        inverse_[x] = y;
        break;
      }
}

inline FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& rows,
                                           std::string label) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw std::invalid_argument("cayley table: empty");
  FiniteGroup g;
  g.order_ = n;
  g.cayley_.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("cayley table: row " + std::to_string(i) +
                                  " has length " + std::to_string(rows[i].size()) +
                                  ", expected " + std::to_string(n));
    for (int v : rows[i]) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("cayley table: entry " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n) + ")");
      g.cayley_.push_back(v);
    }
  }
  g.label_ = label.empty() ? "table" + std::to_string(n) : std::move(label);
  g.derive_identity_and_inverses();
  return g;
}

inline FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
  if (n > 8192) throw std::invalid_argument("cyclic: n > 8192 not supported");
  FiniteGroup g;
  g.order_ = n;
  g.cayley_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.cayley_[static_cast<size_t>(a) * n + b] = (a + b) % n;
  g.identity_ = 0;
  g.inverse_.resize(n);
  for (int a = 0; a < n; ++a) g.inverse_[a] = (n - a) % n;
  g.label_ = "Z" + std::to_string(n);
  return g;
}

inline FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral: n must be >= 1");
  if (n > 512) throw std::invalid_argument("dihedral: n > 512 not supported");
  const int ord = 2 * n;
  // element r^i s^a  <->  index a*n + i;  s r^j = r^-j s
  auto idx = [n](int a, int i) { return a * n + ((i % n) + n) % n; };
  FiniteGroup g;
  g.order_ = ord;
  g.cayley_.resize(static_cast<size_t>(ord) * ord);
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < n; ++i)
      for (int b = 0; b < 2; ++b)
        for (int j = 0; j < n; ++j) {
          int r = (a == 0) ? i + j : i - j;
          g.cayley_[static_cast<size_t>(idx(a, i)) * ord + idx(b, j)] = idx(a ^ b, r);
        }
  g.label_ = "D" + std::to_string(n);
  g.derive_identity_and_inverses();
  return g;
}

inline FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("symmetric: n must be in [1,6]");
  std::vector<std::vector<uint8_t>> perms;
  std::vector<uint8_t> p(n);
  std::iota(p.begin(), p.end(), uint8_t{0});
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<uint8_t>, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;

  const int ord = static_cast<int>(perms.size());
  FiniteGroup g;
  g.order_ = ord;
  g.cayley_.resize(static_cast<size_t>(ord) * ord);
  std::vector<uint8_t> c(n);
  for (int a = 0; a < ord; ++a)
    for (int b = 0; b < ord; ++b) {
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      g.cayley_[static_cast<size_t>(a) * ord + b] = index[c];
    }
  g.label_ = "S" + std::to_string(n);
  g.derive_identity_and_inverses();
  return g;
}

/// Checks every group axiom; exhaustive associativity for n <= 64, sampled
/// (10^4 seeded triples) beyond. Structural soundness is guaranteed by
/// construction, so only axioms are reported.
inline ValidationReport validate_group(const FiniteGroup& g) {
  ValidationReport rep;
  const int n = g.order();

  AxiomResult latin{"latin-square"};
  for (int a = 0; a < n && latin.pass; ++a) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (seen_row[g.mul(a, b)]++) {
        latin.pass = false;
        latin.witness = {a, b, g.mul(a, b)};
        latin.detail = "duplicate value in row";
        break;
      }
      if (seen_col[g.mul(b, a)]++) {
        latin.pass = false;
        latin.witness = {b, a, g.mul(b, a)};
        latin.detail = "duplicate value in column";
        break;
      }
    }
  }
  rep.axioms.push_back(latin);

  AxiomResult ident{"identity"};
  if (g.identity() < 0) {
    ident.pass = false;
    ident.detail = "no two-sided identity element";
  } else {
    const int e = g.identity();
    for (int x = 0; x < n; ++x)
      if (g.mul(e, x) != x || g.mul(x, e) != x) {
        ident.pass = false;
        ident.witness = {e, x, -1};
        break;
      }
  }
  rep.axioms.push_back(ident);

  AxiomResult invs{"inverse"};
  if (g.identity() < 0) {
    invs.pass = false;
    invs.detail = "no identity, so inverses are undefined";
  } else {
    for (int x = 0; x < n; ++x) {
      const int y = g.inv(x);
      if (y < 0 || g.mul(x, y) != g.identity() || g.mul(y, x) != g.identity()) {
        invs.pass = false;
        invs.witness = {x, y, -1};
        break;
      }
    }
  }
  rep.axioms.push_back(invs);

  AxiomResult assoc{"associativity"};
  if (n <= 64) {
    for (int a = 0; a < n && assoc.pass; ++a)
      for (int b = 0; b < n && assoc.pass; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
            assoc.pass = false;
            assoc.witness = {a, b, c};
            break;
          }
  } else {
    std::mt19937_64 rng(0x5eedu);
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int t = 0; t < 10000; ++t) {
      int a = d(rng), b = d(rng), c = d(rng);
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
        assoc.pass = false;
        assoc.witness = {a, b, c};
        assoc.detail = "sampled";
        break;
      }
    }
  }
  rep.axioms.push_back(assoc);
  return rep;
}

}  // namespace tauconv
