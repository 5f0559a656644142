#pragma once

#include "tauconv/tau_algebra.hpp"

namespace tauconv {

/// An element of L^p(G_tau): a GFunction tagged with its exponent.
template <class S>
struct LpElement {
  GFunction<S> fn;
  double p = 1.0;

  LpElement(GFunction<S> f, double exponent) : fn(std::move(f)), p(exponent) {
    if (!(exponent >= 1.0)) throw std::invalid_argument("LpElement: p must be >= 1");
  }
  double pnorm() const { return norm(fn, p); }
};

/// Left module action of L^1 on L^p: (f x_(p) u)(h,.) = tilde(f) * u_h.
/// For p = 1 this is exactly lconv.
template <class S>
LpElement<S> module_action(const GFunction<S>& f, const LpElement<S>& u) {
  f.require_same(u.fn);
  return {lconv(f, u.fn), u.p};
}

/// Residual of (f xl g) x_(p) u == f x_(p) (g x_(p) u); identically zero
/// in the exact backend.
template <class S>
double check_module_associativity(const GFunction<S>& f, const GFunction<S>& g,
                                  const LpElement<S>& u) {
  const LpElement<S> lhs = module_action(lconv(f, g), u);
  const LpElement<S> rhs = module_action(f, module_action(g, u));
  double res = 0.0;
  for (size_t i = 0; i < lhs.fn.values().size(); ++i)
    res = std::max(res, scalar_traits<S>::abs_value(lhs.fn.values()[i] - rhs.fn.values()[i]));
  return res;
}

/// On a finite K the point mass at e_K is an exact unit of L^1(K), so the
/// approximate-identity construction Phi(psi_n) collapses to the single
/// element Phi(1_{e_K}) and its action residual vanishes.
template <class S>
double approx_identity_action(const PhiDensity<S>& Phi, const LpElement<S>& u) {
  const auto& G = u.fn.group();
  const auto unit = KFunction<S>::point_mass(G.k_ptr(), G.K().identity());
  const LpElement<S> acted = module_action(lift_phi(Phi, unit), u);
  double res = 0.0;
  for (size_t i = 0; i < acted.fn.values().size(); ++i)
    res = std::max(res, scalar_traits<S>::abs_value(acted.fn.values()[i] - u.fn.values()[i]));
  return res;
}

}  // namespace tauconv
