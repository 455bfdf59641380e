#pragma once

#include <cstdint>
#include <vector>

#include "stabdeg/group.hpp"
#include "stabdeg/rational.hpp"
#include "stabdeg/spin.hpp"

namespace stabdeg {

/// A_F(sigma), indexed by element index. Entry 0 is |F|; the vector is even and
/// every entry is congruent to |F| mod 4.
struct CorrelationVector {
  GroupSpec group;
  std::vector<std::int64_t> values;

  std::int64_t operator[](std::size_t f) const { return values[f]; }
  friend bool operator==(const CorrelationVector&, const CorrelationVector&) = default;
};

/// (A_F(sigma), sum of spins); the magnetization squared equals the sum of A.
struct ExtendedCorrelation {
  CorrelationVector corr;
  std::int64_t magnetization = 0;

  friend bool operator==(const ExtendedCorrelation&, const ExtendedCorrelation&) = default;
};

/// Translation-invariant two-body couplings j_f.
struct Interaction {
  GroupSpec group;
  std::vector<Rational> values;

  static Interaction zero(const GroupSpec& group);
  static Interaction delta(const GroupSpec& group, std::size_t f, Rational value = Rational(1));
};

/// A_F(sigma)_f = sum_l sigma_l sigma_{l+f}, evaluated as a double loop.
CorrelationVector correlate(const SpinConfig& sigma);

/// Same values through XOR and popcount of translated bit patterns.
CorrelationVector correlate_fast(const SpinConfig& sigma);

ExtendedCorrelation extended_correlate(const SpinConfig& sigma);

/// H(sigma, j) = <j, A(sigma)>, exact.
Rational energy(const CorrelationVector& corr, const Interaction& j);
Rational energy(const SpinConfig& sigma, const Interaction& j);

/// (j_ev)_f = (j_f + j_{-f}) / 2.
Interaction even_projection(const Interaction& j);

/// Whether every entry of `corr` could be a correlation value (range, parity, evenness).
bool in_correlation_lattice(const CorrelationVector& corr);

struct FourierPowerCheck {
  double min_real = 0.0;
  double max_imag_abs = 0.0;

  bool nonnegative(double tol) const { return min_real >= -tol && max_imag_abs <= tol; }
};

/// Unitary character transform of A_F(sigma) over all characters of F.
FourierPowerCheck fourier_power_check(const SpinConfig& sigma);

}  // namespace stabdeg
