#pragma once

#include <bit>
#include <complex>
#include <numbers>
#include <vector>

#include "tauconv/tau_algebra.hpp"

namespace tauconv {

/// DFT plan for a cyclic K, forward kernel exp(-2*pi*i*j*k/n).
/// Direct O(n^2) transform for small or non-power-of-two n, iterative
/// radix-2 for powers of two.
class SpectralPlan {
 public:
  explicit SpectralPlan(int n) : n_(n), pow2_(n > 0 && std::has_single_bit(static_cast<unsigned>(n))) {
    if (n < 1) throw std::invalid_argument("SpectralPlan: n must be >= 1");
    tw_.resize(n_);
    for (int j = 0; j < n_; ++j) {
      const double th = -2.0 * std::numbers::pi * j / n_;
      tw_[j] = {std::cos(th), std::sin(th)};
    }
  }

  int size() const { return n_; }

  /// True when the convolutions should take the spectral path at all:
  /// either small enough for the direct transform or a power of two.
  bool fast() const { return pow2_ || n_ <= 64; }

  std::vector<Complexd> forward(std::span<const Complexd> a) const { return transform(a, false); }
  std::vector<Complexd> inverse(std::span<const Complexd> a) const {
    auto out = transform(a, true);
    const double s = 1.0 / n_;
    for (auto& x : out) x *= s;
    return out;
  }

 private:
  std::vector<Complexd> transform(std::span<const Complexd> a, bool inv) const {
    if (static_cast<int>(a.size()) != n_)
      throw std::invalid_argument("SpectralPlan: length mismatch");
    if (pow2_ && n_ > 1) return fft_pow2(a, inv);
    std::vector<Complexd> out(n_);
    for (int j = 0; j < n_; ++j) {
      Complexd acc{};
      for (int k = 0; k < n_; ++k) {
        Complexd w = tw_[static_cast<int>((static_cast<long long>(j) * k) % n_)];
        if (inv) w = std::conj(w);
        acc += a[k] * w;
      }
      out[j] = acc;
    }
    return out;
  }

  std::vector<Complexd> fft_pow2(std::span<const Complexd> a, bool inv) const {
    const int n = n_;
    std::vector<Complexd> v(a.begin(), a.end());
    for (int i = 1, j = 0; i < n; ++i) {  // bit-reversal permutation
      int bit = n >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(v[i], v[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
      const int stride = n / len;
      for (int i = 0; i < n; i += len)
        for (int k = 0; k < len / 2; ++k) {
          Complexd w = tw_[static_cast<size_t>(k) * stride];
          if (inv) w = std::conj(w);
          const Complexd lo = v[i + k];
          const Complexd hi = v[i + k + len / 2] * w;
          v[i + k] = lo + hi;
          v[i + k + len / 2] = lo - hi;
        }
    }
    return v;
  }

  int n_;
  bool pow2_;
  std::vector<Complexd> tw_;
};

inline void require_cyclic(const FiniteGroup& K) {
  if (!K.is_cyclic_canonical())
    throw std::invalid_argument("spectral: K is not a canonical cyclic group");
}

inline std::vector<Complexd> dft(const KFunction<Complexd>& f) {
  require_cyclic(f.group());
  SpectralPlan plan(f.size());
  return plan.forward({f.values().data(), f.values().size()});
}

inline KFunction<Complexd> idft(std::span<const Complexd> spectrum,
                                std::shared_ptr<const FiniteGroup> k) {
  require_cyclic(*k);
  SpectralPlan plan(static_cast<int>(spectrum.size()));
  KFunction<Complexd> out(std::move(k));
  auto v = plan.inverse(spectrum);
  out.values() = std::move(v);
  return out;
}

namespace detail {

enum class TauOp { right, left, both };

inline GFunction<Complexd> conv_spectral(const GFunction<Complexd>& f,
                                         const GFunction<Complexd>& g, TauOp op) {
  f.require_same(g);
  require_cyclic(f.group().K());
  const SpectralPlan plan(f.k_order());
  if (!plan.fast()) {  // plain convolution beats a direct transform here
    switch (op) {
      case TauOp::right: return rconv(f, g);
      case TauOp::left: return lconv(f, g);
      case TauOp::both: return tconv(f, g);
    }
  }
  const int nk = f.k_order();
  const bool need_r = op != TauOp::left;
  const bool need_l = op != TauOp::right;

  std::vector<Complexd> Gt, Ft;
  if (need_r) {
    const auto gt = tilde(g);
    Gt = plan.forward({gt.values().data(), gt.values().size()});
  }
  if (need_l) {
    const auto ft = tilde(f);
    Ft = plan.forward({ft.values().data(), ft.values().size()});
  }

  GFunction<Complexd> out(f.group_ptr());
  std::vector<Complexd> acc(nk);
  for (int h = 0; h < f.h_order(); ++h) {
    std::fill(acc.begin(), acc.end(), Complexd{});
    if (need_r) {
      auto Fh = plan.forward(f.row(h));
      for (int k = 0; k < nk; ++k) acc[k] += Fh[k] * Gt[k];
    }
    if (need_l) {
      auto Gh = plan.forward(g.row(h));
      for (int k = 0; k < nk; ++k) acc[k] += Ft[k] * Gh[k];
    }
    auto res = plan.inverse(acc);
    const double scale = (op == TauOp::both) ? 0.5 : 1.0;
    auto dst = out.row(h);
    for (int k = 0; k < nk; ++k) dst[k] = scale * res[k];
  }
  return out;
}

}  // namespace detail

/// Spectral fast paths; bit-identical semantics to the naive operations up
/// to floating-point rounding. Cyclic K only.
inline GFunction<Complexd> rconv_fft(const GFunction<Complexd>& f, const GFunction<Complexd>& g) {
  return detail::conv_spectral(f, g, detail::TauOp::right);
}
inline GFunction<Complexd> lconv_fft(const GFunction<Complexd>& f, const GFunction<Complexd>& g) {
  return detail::conv_spectral(f, g, detail::TauOp::left);
}
inline GFunction<Complexd> tconv_fft(const GFunction<Complexd>& f, const GFunction<Complexd>& g) {
  return detail::conv_spectral(f, g, detail::TauOp::both);
}

}  // namespace tauconv
