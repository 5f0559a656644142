#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "tauconv/scalar.hpp"
#include "tauconv/semidirect.hpp"

namespace tauconv {

/// A function on a finite group (used for elements of L^1(K), and for
/// densities on H). Counting-measure Haar weights throughout.
template <class S>
class KFunction {
 public:
  using scalar = S;

  explicit KFunction(std::shared_ptr<const FiniteGroup> k)
      : k_(std::move(k)), v_(k_->order(), scalar_traits<S>::zero()) {}

  static KFunction point_mass(std::shared_ptr<const FiniteGroup> k, int at,
                              S value = scalar_traits<S>::one()) {
    KFunction f(std::move(k));
    f.v_.at(at) = value;
    return f;
  }

  const FiniteGroup& group() const { return *k_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return k_; }
  int size() const { return static_cast<int>(v_.size()); }

  S& operator[](int k) { return v_[k]; }
  const S& operator[](int k) const { return v_[k]; }
  std::vector<S>& values() { return v_; }
  const std::vector<S>& values() const { return v_; }

  bool is_zero() const {
    return std::all_of(v_.begin(), v_.end(),
                       [](const S& x) { return scalar_traits<S>::is_zero(x); });
  }

  friend KFunction operator+(KFunction a, const KFunction& b) {
    a.require_same(b);
    for (int i = 0; i < a.size(); ++i) a.v_[i] += b.v_[i];
    return a;
  }
  friend KFunction operator-(KFunction a, const KFunction& b) {
    a.require_same(b);
    for (int i = 0; i < a.size(); ++i) a.v_[i] -= b.v_[i];
    return a;
  }
  friend KFunction operator*(const S& c, KFunction a) {
    for (auto& x : a.v_) x = c * x;
    return a;
  }
  friend bool operator==(const KFunction& a, const KFunction& b) {
    return *a.k_ == *b.k_ && a.v_ == b.v_;
  }

  void require_same(const KFunction& o) const {
    if (k_ != o.k_ && *k_ != *o.k_)
      throw std::invalid_argument("KFunction: operands live on different groups");
  }

 private:
  std::shared_ptr<const FiniteGroup> k_;
  std::vector<S> v_;
};

/// A function on G_tau = H |x K, stored row-major as values[h*|K| + k].
template <class S>
class GFunction {
 public:
  using scalar = S;

  explicit GFunction(GroupPtr g)
      : g_(std::move(g)), v_(static_cast<size_t>(g_->order()), scalar_traits<S>::zero()) {}

  static GFunction point_mass(GroupPtr g, int h, int k, S value = scalar_traits<S>::one()) {
    GFunction f(std::move(g));
    f.at(h, k) = value;
    return f;
  }
  static GFunction point_mass_flat(GroupPtr g, int x, S value = scalar_traits<S>::one()) {
    auto [h, k] = g->unflatten(x);
    return point_mass(std::move(g), h, k, value);
  }

  const SemidirectGroup& group() const { return *g_; }
  const GroupPtr& group_ptr() const { return g_; }
  int h_order() const { return g_->h_order(); }
  int k_order() const { return g_->k_order(); }
  int size() const { return static_cast<int>(v_.size()); }

  S& at(int h, int k) { return v_[static_cast<size_t>(h) * g_->k_order() + k]; }
  const S& at(int h, int k) const { return v_[static_cast<size_t>(h) * g_->k_order() + k]; }
  S& flat(int x) { return v_[static_cast<size_t>(x)]; }
  const S& flat(int x) const { return v_[static_cast<size_t>(x)]; }

  std::span<S> row(int h) { return {v_.data() + static_cast<size_t>(h) * g_->k_order(), static_cast<size_t>(g_->k_order())}; }
  std::span<const S> row(int h) const { return {v_.data() + static_cast<size_t>(h) * g_->k_order(), static_cast<size_t>(g_->k_order())}; }

  std::vector<S>& values() { return v_; }
  const std::vector<S>& values() const { return v_; }

  bool is_zero() const {
    return std::all_of(v_.begin(), v_.end(),
                       [](const S& x) { return scalar_traits<S>::is_zero(x); });
  }

  friend GFunction operator+(GFunction a, const GFunction& b) {
    a.require_same(b);
    for (size_t i = 0; i < a.v_.size(); ++i) a.v_[i] += b.v_[i];
    return a;
  }
  friend GFunction operator-(GFunction a, const GFunction& b) {
    a.require_same(b);
    for (size_t i = 0; i < a.v_.size(); ++i) a.v_[i] -= b.v_[i];
    return a;
  }
  friend GFunction operator*(const S& c, GFunction a) {
    for (auto& x : a.v_) x = c * x;
    return a;
  }
  friend bool operator==(const GFunction& a, const GFunction& b) {
    return same_group(a.g_, b.g_) && a.v_ == b.v_;
  }

  void require_same(const GFunction& o) const {
    if (!same_group(g_, o.g_))
      throw std::invalid_argument("GFunction: operands live on different groups");
  }

 private:
  GroupPtr g_;
  std::vector<S> v_;
};

/// f_h: the restriction of f to the fiber {h} x K.
template <class S>
KFunction<S> section(const GFunction<S>& f, int h) {
  if (h < 0 || h >= f.h_order()) throw std::out_of_range("section: h out of range");
  KFunction<S> out(f.group().k_ptr());
  auto r = f.row(h);
  std::copy(r.begin(), r.end(), out.values().begin());
  return out;
}

/// The projection onto L^1(K): tilde(f)(k) = sum_h f(h,k) * delta(h) * w(h),
/// which is the plain column sum on finite groups.
template <class S>
KFunction<S> tilde(const GFunction<S>& f) {
  KFunction<S> out(f.group().k_ptr());
  const int nk = f.k_order();
  for (int h = 0; h < f.h_order(); ++h) {
    auto r = f.row(h);
    for (int k = 0; k < nk; ++k) out[k] += r[k];
  }
  return out;
}

// --- norms ------------------------------------------------------------
//
// Returned as doubles in both backends; the exact backend additionally
// exposes sq_modulus_profile for equality checks that must not go through
// floating point.

namespace detail {
template <class S>
double norm_p_span(std::span<const S> v, double p) {
  if (p == std::numeric_limits<double>::infinity()) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, scalar_traits<S>::abs_value(x));
    return m;
  }
  if (p < 1.0) throw std::invalid_argument("norm: p must be >= 1");
  double acc = 0.0;
  for (const auto& x : v) acc += std::pow(scalar_traits<S>::abs_value(x), p);
  return std::pow(acc, 1.0 / p);
}
}  // namespace detail

template <class S>
double norm(const KFunction<S>& f, double p = 1.0) {
  return detail::norm_p_span<S>({f.values().data(), f.values().size()}, p);
}

template <class S>
double norm(const GFunction<S>& f, double p = 1.0) {
  return detail::norm_p_span<S>({f.values().data(), f.values().size()}, p);
}

constexpr double p_infinity = std::numeric_limits<double>::infinity();

/// Plain (unweighted modulus) sum of values -- the integral of f. For real
/// nonnegative functions this equals the L^1 norm and is exact.
template <class S>
S mass(const GFunction<S>& f) {
  S acc = scalar_traits<S>::zero();
  for (const auto& x : f.values()) acc += x;
  return acc;
}
template <class S>
S mass(const KFunction<S>& f) {
  S acc = scalar_traits<S>::zero();
  for (const auto& x : f.values()) acc += x;
  return acc;
}

/// Sorted multiset of squared moduli. Two functions related by a
/// position-permutation plus conjugation have identical profiles, which
/// makes L^1-isometry claims checkable without square roots.
template <class S>
std::vector<typename scalar_traits<S>::real_type> sq_modulus_profile(const GFunction<S>& f) {
  std::vector<typename scalar_traits<S>::real_type> out;
  out.reserve(f.values().size());
  for (const auto& x : f.values()) out.push_back(scalar_traits<S>::abs_sq(x));
  std::sort(out.begin(), out.end());
  return out;
}
template <class S>
std::vector<typename scalar_traits<S>::real_type> sq_modulus_profile(const KFunction<S>& f) {
  std::vector<typename scalar_traits<S>::real_type> out;
  out.reserve(f.values().size());
  for (const auto& x : f.values()) out.push_back(scalar_traits<S>::abs_sq(x));
  std::sort(out.begin(), out.end());
  return out;
}

/// L^1 distance between two functions; the scale-aware comparison helper
/// for the floating backend.
template <class F>
double l1_residual(const F& a, const F& b) {
  return norm(a - b, 1.0);
}
template <class F>
bool close_l1(const F& a, const F& b, double tol_scale = 1e-9) {
  return l1_residual(a, b) <= tol_scale * (1.0 + norm(a) + norm(b));
}

/// A nonnegative real unit-mass element of L^1(G_tau). Validated once at
/// construction; the lift's isometry depends on it.
template <class S>
class PhiDensity {
 public:
  explicit PhiDensity(GFunction<S> phi) : phi_(std::move(phi)) {
    using T = scalar_traits<S>;
    for (const auto& x : phi_.values())
      if (!T::is_real_nonnegative(x))
        throw std::invalid_argument("PhiDensity: values must be real and nonnegative");
    const S total = mass(phi_);
    if constexpr (T::exact) {
      if (!(total == T::one())) throw std::invalid_argument("PhiDensity: mass must equal 1");
    } else {
      if (std::abs(T::to_complex(total).real() - 1.0) > 1e-12)
        throw std::invalid_argument("PhiDensity: mass must equal 1 within 1e-12");
    }
    row_mass_.reserve(phi_.h_order());
    for (int h = 0; h < phi_.h_order(); ++h) {
      S m = T::zero();
      for (const auto& x : phi_.row(h)) m += x;
      row_mass_.push_back(m);
    }
  }

  static PhiDensity uniform(const GroupPtr& g) {
    GFunction<S> phi(g);
    using T = scalar_traits<S>;
    S w;
    if constexpr (T::exact) {
      w = S{Rational(1, g->order())};
    } else {
      w = T::from_real(1.0 / g->order());
    }
    for (auto& x : phi.values()) x = w;
    return PhiDensity(std::move(phi));
  }

  const GFunction<S>& fn() const { return phi_; }
  /// ||Phi_h||_1, exact in the exact backend (rows are nonnegative).
  const S& row_mass(int h) const { return row_mass_[h]; }

 private:
  GFunction<S> phi_;
  std::vector<S> row_mass_;
};

}  // namespace tauconv
