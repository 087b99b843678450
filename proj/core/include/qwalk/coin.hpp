#pragma once

#include <complex>

namespace qwalk {

using Complex = std::complex<double>;

/// Two-level "coin" of the walk: amplitudes over the internal states
/// {down, up} of the ion. Not forced to be normalized; states built from
/// the named factories are.
struct CoinVector {
  Complex down{0.0, 0.0};
  Complex up{0.0, 0.0};

  double norm_sq() const { return std::norm(down) + std::norm(up); }
  bool is_normalized(double tol = 1e-9) const;

  static CoinVector down_state() { return {1.0, 0.0}; }
  static CoinVector up_state() { return {0.0, 1.0}; }
  /// (|down> + i|up>)/sqrt(2): the coin whose walk has zero mean at every step.
  static CoinVector symmetric();
};

/// (d, u) -> ((d+u)/sqrt2, (d-u)/sqrt2). Norm preserving, self-inverse.
CoinVector hadamard(const CoinVector& c);

}  // namespace qwalk
