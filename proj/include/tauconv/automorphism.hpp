#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tauconv/finite_group.hpp"

namespace tauconv {

/// A homomorphism H -> Aut(K), stored extensionally: one permutation of K's
/// indices per element of H.
struct AutomorphismAction {
  int h_order = 0;
  int k_order = 0;
  std::vector<int32_t> perm;  // perm[h * k_order + k] = tau_h(k)
  std::string label;

  int apply(int h, int k) const { return perm[static_cast<size_t>(h) * k_order + k]; }

  static AutomorphismAction trivial(const FiniteGroup& H, const FiniteGroup& K) {
    AutomorphismAction a;
    a.h_order = H.order();
    a.k_order = K.order();
    a.label = "trivial";
    a.perm.resize(static_cast<size_t>(a.h_order) * a.k_order);
    for (int h = 0; h < a.h_order; ++h)
      for (int k = 0; k < a.k_order; ++k) a.perm[static_cast<size_t>(h) * a.k_order + k] = k;
    return a;
  }

  /// tau_h = (k -> k^-1)^(h mod 2). Intended for cyclic H of even (or unit)
  /// order acting on abelian K; anything else fails validation.
  static AutomorphismAction inversion(const FiniteGroup& H, const FiniteGroup& K) {
    AutomorphismAction a;
    a.h_order = H.order();
    a.k_order = K.order();
    a.label = "inversion";
    a.perm.resize(static_cast<size_t>(a.h_order) * a.k_order);
    for (int h = 0; h < a.h_order; ++h)
      for (int k = 0; k < a.k_order; ++k)
        a.perm[static_cast<size_t>(h) * a.k_order + k] = (h % 2 == 1) ? K.inv(k) : k;
    return a;
  }

  /// tau_h(k) = t^h k t^-h for cyclic H; a homomorphism iff t^|H| is central.
  static AutomorphismAction conjugation(const FiniteGroup& H, const FiniteGroup& K, int t) {
    AutomorphismAction a;
    a.h_order = H.order();
    a.k_order = K.order();
    a.label = "conj(" + std::to_string(t) + ")";
    a.perm.resize(static_cast<size_t>(a.h_order) * a.k_order);
    int th = K.identity();
    for (int h = 0; h < a.h_order; ++h) {
      const int thi = K.inv(th);
      for (int k = 0; k < a.k_order; ++k)
        a.perm[static_cast<size_t>(h) * a.k_order + k] = K.mul(K.mul(th, k), thi);
      th = K.mul(th, t);
    }
    return a;
  }

  static AutomorphismAction from_tables(const std::vector<std::vector<int>>& tables,
                                        std::string label = "table") {
    AutomorphismAction a;
    a.h_order = static_cast<int>(tables.size());
    if (a.h_order == 0) throw std::invalid_argument("action: no permutation tables");
    a.k_order = static_cast<int>(tables[0].size());
    a.label = std::move(label);
    a.perm.reserve(static_cast<size_t>(a.h_order) * a.k_order);
    for (const auto& row : tables) {
      if (static_cast<int>(row.size()) != a.k_order)
        throw std::invalid_argument("action: ragged permutation tables");
      for (int v : row) {
        if (v < 0 || v >= a.k_order)
          throw std::invalid_argument("action: permutation entry out of range");
        a.perm.push_back(v);
      }
    }
    return a;
  }

  friend bool operator==(const AutomorphismAction& a, const AutomorphismAction& b) {
    return a.h_order == b.h_order && a.k_order == b.k_order && a.perm == b.perm;
  }
};

/// Validates the identity, automorphism and homomorphism laws.
/// Non-permutation rows are a structural failure reported under "permutation".
inline ValidationReport validate_action(const FiniteGroup& H, const FiniteGroup& K,
                                        const AutomorphismAction& a) {
  ValidationReport rep;

  AxiomResult dims{"dimensions"};
  if (a.h_order != H.order() || a.k_order != K.order()) {
    dims.pass = false;
    dims.detail = "action tables sized " + std::to_string(a.h_order) + "x" +
                  std::to_string(a.k_order) + " for |H|=" + std::to_string(H.order()) +
                  ", |K|=" + std::to_string(K.order());
    rep.axioms.push_back(dims);
    return rep;
  }
  rep.axioms.push_back(dims);

  AxiomResult bij{"permutation"};
  for (int h = 0; h < a.h_order && bij.pass; ++h) {
    std::vector<char> seen(a.k_order, 0);
    for (int k = 0; k < a.k_order; ++k)
      if (seen[a.apply(h, k)]++) {
        bij.pass = false;
        bij.witness = {h, k, a.apply(h, k)};
        bij.detail = "row is not a permutation";
        break;
      }
  }
  rep.axioms.push_back(bij);
  if (!bij.pass) return rep;

  AxiomResult ident{"identity-acts-trivially"};
  for (int k = 0; k < a.k_order; ++k)
    if (a.apply(H.identity(), k) != k) {
      ident.pass = false;
      ident.witness = {H.identity(), k, -1};
      break;
    }
  rep.axioms.push_back(ident);

  AxiomResult automorph{"automorphism"};
  for (int h = 0; h < a.h_order && automorph.pass; ++h)
    for (int k = 0; k < a.k_order && automorph.pass; ++k)
      for (int kp = 0; kp < a.k_order; ++kp)
        if (a.apply(h, K.mul(k, kp)) != K.mul(a.apply(h, k), a.apply(h, kp))) {
          automorph.pass = false;
          automorph.witness = {h, k, kp};
          break;
        }
  rep.axioms.push_back(automorph);

  AxiomResult hom{"homomorphism"};
  for (int h = 0; h < a.h_order && hom.pass; ++h)
    for (int hp = 0; hp < a.h_order && hom.pass; ++hp)
      for (int k = 0; k < a.k_order; ++k)
        if (a.apply(H.mul(h, hp), k) != a.apply(h, a.apply(hp, k))) {
          hom.pass = false;
          hom.witness = {h, hp, k};
          break;
        }
  rep.axioms.push_back(hom);
  return rep;
}

}  // namespace tauconv
