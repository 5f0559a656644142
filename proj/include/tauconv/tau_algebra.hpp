#pragma once

#include <atomic>
#include <span>
#include <stdexcept>

#include "tauconv/function.hpp"

namespace tauconv {

namespace testhooks {
/// When set, conv_K contributes the summation term at the group identity
/// with a flipped sign. Exists so the verification suite can demonstrate
/// its own sensitivity; never enable outside tests.
inline std::atomic<bool> conv_k_sign_fault{false};
}  // namespace testhooks

namespace detail {

/// out[x] += sum_y a[y] b[y^-1 x] over the finite group K (counting measure).
template <class S>
void conv_accumulate(const FiniteGroup& K, std::span<const S> a, std::span<const S> b,
                     std::span<S> out) {
  const int n = K.order();
  const bool fault = testhooks::conv_k_sign_fault.load(std::memory_order_relaxed);
  const int e = K.identity();
  for (int y = 0; y < n; ++y) {
    if (scalar_traits<S>::is_zero(a[y])) continue;
    const S ay = (fault && y == e) ? -a[y] : a[y];
    const int yi = K.inv(y);
    const int32_t* row = K.table().data() + static_cast<size_t>(yi) * n;
    for (int x = 0; x < n; ++x) out[x] += ay * b[row[x]];
  }
}

}  // namespace detail

/// Standard convolution on L^1(K): (a*b)(x) = sum_y a(y) b(y^-1 x).
template <class S>
KFunction<S> conv_K(const KFunction<S>& a, const KFunction<S>& b) {
  a.require_same(b);
  KFunction<S> out(a.group_ptr());
  detail::conv_accumulate<S>(a.group(), {a.values().data(), a.values().size()},
                             {b.values().data(), b.values().size()},
                             {out.values().data(), out.values().size()});
  return out;
}

/// Standard involution on L^1(K): a*(k) = Delta_K(k^-1) conj(a(k^-1)),
/// with Delta_K == 1 on finite groups.
template <class S>
KFunction<S> involution_K(const KFunction<S>& a) {
  KFunction<S> out(a.group_ptr());
  const auto& K = a.group();
  for (int k = 0; k < K.order(); ++k)
    out[k] = scalar_traits<S>::conjugate(a[K.inv(k)]);
  return out;
}

/// Right tau-convolution: (f xr g)(h,.) = f_h * tilde(g).
template <class S>
GFunction<S> rconv(const GFunction<S>& f, const GFunction<S>& g) {
  f.require_same(g);
  const KFunction<S> gt = tilde(g);
  GFunction<S> out(f.group_ptr());
  const auto& K = f.group().K();
  for (int h = 0; h < f.h_order(); ++h)
    detail::conv_accumulate<S>(K, f.row(h), {gt.values().data(), gt.values().size()}, out.row(h));
  return out;
}

/// Left tau-convolution: (f xl g)(h,.) = tilde(f) * g_h.
template <class S>
GFunction<S> lconv(const GFunction<S>& f, const GFunction<S>& g) {
  f.require_same(g);
  const KFunction<S> ft = tilde(f);
  GFunction<S> out(f.group_ptr());
  const auto& K = f.group().K();
  for (int h = 0; h < f.h_order(); ++h)
    detail::conv_accumulate<S>(K, {ft.values().data(), ft.values().size()}, g.row(h), out.row(h));
  return out;
}

/// tau-convolution: the average of the right and left tau-convolutions.
/// Computes each one once; the 1/2 factor is exact in the exact backend.
template <class S>
GFunction<S> tconv(const GFunction<S>& f, const GFunction<S>& g) {
  GFunction<S> r = rconv(f, g);
  const GFunction<S> l = lconv(f, g);
  const S half = scalar_traits<S>::half();
  for (size_t i = 0; i < r.values().size(); ++i)
    r.values()[i] = half * (r.values()[i] + l.values()[i]);
  return r;
}

/// tau-involution: per-row K-involution.
template <class S>
GFunction<S> involution_tau(const GFunction<S>& f) {
  GFunction<S> out(f.group_ptr());
  const auto& K = f.group().K();
  for (int h = 0; h < f.h_order(); ++h) {
    auto src = f.row(h);
    auto dst = out.row(h);
    for (int k = 0; k < K.order(); ++k)
      dst[k] = scalar_traits<S>::conjugate(src[K.inv(k)]);
  }
  return out;
}

/// The ordinary group-algebra convolution of L^1(G_tau) itself, on flattened
/// indices. Only the comparison baseline; the tau-operations above are not
/// this unless H is trivial.
template <class S>
GFunction<S> standard_conv_G(const GFunction<S>& f, const GFunction<S>& g) {
  f.require_same(g);
  GFunction<S> out(f.group_ptr());
  const auto& G = f.group();
  const int n = G.order();
  for (int y = 0; y < n; ++y) {
    const S& fy = f.flat(y);
    if (scalar_traits<S>::is_zero(fy)) continue;
    const int yi = G.g_inv(y);
    for (int x = 0; x < n; ++x) out.flat(x) += fy * g.flat(G.g_mul(yi, x));
  }
  return out;
}

/// The lift of psi in L^1(K) along a density Phi:
/// Phi(psi)(h,k) = psi(k) * ||Phi_h||_1.
template <class S>
GFunction<S> lift_phi(const PhiDensity<S>& Phi, const KFunction<S>& psi) {
  if (Phi.fn().group().K() != psi.group())
    throw std::invalid_argument("lift_phi: psi lives on a different K");
  GFunction<S> out(Phi.fn().group_ptr());
  for (int h = 0; h < out.h_order(); ++h) {
    const S& m = Phi.row_mass(h);
    auto dst = out.row(h);
    for (int k = 0; k < out.k_order(); ++k) dst[k] = m * psi[k];
  }
  return out;
}

/// The section embedding psi_phi(h,k) = delta(h^-1) phiH(h) psi(k), with
/// delta == 1 here. phiH must be a nonnegative unit-mass function on H;
/// tilde(psi_phi) == psi exactly.
template <class S>
GFunction<S> psi_phi_embed(const GroupPtr& g, const KFunction<S>& phiH, const KFunction<S>& psi) {
  using T = scalar_traits<S>;
  if (phiH.group() != g->H()) throw std::invalid_argument("psi_phi_embed: phiH must live on H");
  if (psi.group() != g->K()) throw std::invalid_argument("psi_phi_embed: psi must live on K");
  for (const auto& x : phiH.values())
    if (!T::is_real_nonnegative(x))
      throw std::invalid_argument("psi_phi_embed: phiH must be nonnegative");
  const S total = mass(phiH);
  if constexpr (T::exact) {
    if (!(total == T::one())) throw std::invalid_argument("psi_phi_embed: phiH must have mass 1");
  } else {
    if (std::abs(T::to_complex(total).real() - 1.0) > 1e-12)
      throw std::invalid_argument("psi_phi_embed: phiH must have mass 1 within 1e-12");
  }
  GFunction<S> out(g);
  for (int h = 0; h < out.h_order(); ++h) {
    auto dst = out.row(h);
    for (int k = 0; k < out.k_order(); ++k) dst[k] = phiH[h] * psi[k];
  }
  return out;
}

/// Membership in the kernel ideal J^1_tau = { f : tilde(f) = 0 }.
/// The exact backend ignores tol and tests exact vanishing.
template <class S>
bool in_J1(const GFunction<S>& f, double tol = 0.0) {
  if (tol < 0.0) throw std::invalid_argument("in_J1: tol must be >= 0");
  const KFunction<S> t = tilde(f);
  if constexpr (scalar_traits<S>::exact) {
    return t.is_zero();
  } else {
    return norm(t, 1.0) <= tol;
  }
}

/// The tau-convolution associator (f x g) x u - f x (g x u). Nonzero in
/// general; vanishes identically iff H is trivial.
template <class S>
GFunction<S> associator_tau(const GFunction<S>& f, const GFunction<S>& g, const GFunction<S>& u) {
  return tconv(tconv(f, g), u) - tconv(f, tconv(g, u));
}

}  // namespace tauconv
