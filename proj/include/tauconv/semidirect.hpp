#pragma once

#include <cmath>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tauconv/automorphism.hpp"
#include "tauconv/finite_group.hpp"

namespace tauconv {

/// Haar weights and modular data. On finite groups everything here is
/// identically 1 (counting measure, delta == 1, unimodular factors); the
/// structure is kept explicit because the quadrature model in continuum.hpp
/// is the place where delta actually varies.
struct HaarData {
  std::vector<double> h_weights;
  std::vector<double> k_weights;
  std::vector<double> delta;  // per H element
  std::vector<double> mod_H;
  std::vector<double> mod_K;

  static HaarData counting(int h_order, int k_order) {
    HaarData d;
    d.h_weights.assign(h_order, 1.0);
    d.k_weights.assign(k_order, 1.0);
    d.delta.assign(h_order, 1.0);
    d.mod_H.assign(h_order, 1.0);
    d.mod_K.assign(k_order, 1.0);
    return d;
  }
};

/// The semidirect product of H and K along an action tau, with the product
/// (h,k)(h',k') = (hh', k tau_h(k')) and inverse (h^-1, tau_{h^-1}(k^-1)).
/// Flattened element index: (h,k) -> h*|K| + k; every module and file format
/// uses this one layout.
class SemidirectGroup {
 public:
  /// Throws ValidationError when the action fails validate_action.
  SemidirectGroup(std::shared_ptr<const FiniteGroup> H, std::shared_ptr<const FiniteGroup> K,
                  AutomorphismAction action, std::string label = "")
      : H_(std::move(H)), K_(std::move(K)), action_(std::move(action)), label_(std::move(label)) {
    auto rep = validate_action(*H_, *K_, action_);
    if (!rep.ok())
      throw ValidationError("semidirect: invalid action: " + rep.first_failure(), rep);
    haar_ = HaarData::counting(H_->order(), K_->order());
    if (label_.empty()) label_ = H_->label() + "|x" + K_->label() + "[" + action_.label + "]";
  }

  const FiniteGroup& H() const { return *H_; }
  const FiniteGroup& K() const { return *K_; }
  std::shared_ptr<const FiniteGroup> k_ptr() const { return K_; }
  std::shared_ptr<const FiniteGroup> h_ptr() const { return H_; }
  const AutomorphismAction& action() const { return action_; }
  const HaarData& haar() const { return haar_; }
  const std::string& label() const { return label_; }

  int h_order() const { return H_->order(); }
  int k_order() const { return K_->order(); }
  int order() const { return H_->order() * K_->order(); }

  int flatten(int h, int k) const { return h * K_->order() + k; }
  std::pair<int, int> unflatten(int x) const { return {x / K_->order(), x % K_->order()}; }
  int identity() const { return flatten(H_->identity(), K_->identity()); }

  std::pair<int, int> mul_hk(std::pair<int, int> x, std::pair<int, int> y) const {
    return {H_->mul(x.first, y.first), K_->mul(x.second, action_.apply(x.first, y.second))};
  }
  std::pair<int, int> inv_hk(std::pair<int, int> x) const {
    const int hi = H_->inv(x.first);
    return {hi, action_.apply(hi, K_->inv(x.second))};
  }

  int g_mul(int x, int y) const {
    auto r = mul_hk(unflatten(x), unflatten(y));
    return flatten(r.first, r.second);
  }
  int g_inv(int x) const {
    auto r = inv_hk(unflatten(x));
    return flatten(r.first, r.second);
  }

  /// Materializes the full group on flattened indices.
  FiniteGroup derived_group() const {
    const int n = order();
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) rows[x][y] = g_mul(x, y);
    return FiniteGroup::from_table(rows, label_ + "#flat");
  }

  friend bool operator==(const SemidirectGroup& a, const SemidirectGroup& b) {
    return *a.H_ == *b.H_ && *a.K_ == *b.K_ && a.action_ == b.action_;
  }
  friend bool operator!=(const SemidirectGroup& a, const SemidirectGroup& b) { return !(a == b); }

 private:
  std::shared_ptr<const FiniteGroup> H_;
  std::shared_ptr<const FiniteGroup> K_;
  AutomorphismAction action_;
  HaarData haar_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const SemidirectGroup>;

inline GroupPtr make_semidirect(FiniteGroup H, FiniteGroup K, AutomorphismAction action,
                                std::string label = "") {
  auto hp = std::make_shared<const FiniteGroup>(std::move(H));
  auto kp = std::make_shared<const FiniteGroup>(std::move(K));
  return std::make_shared<const SemidirectGroup>(hp, kp, std::move(action), std::move(label));
}

inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace tauconv
