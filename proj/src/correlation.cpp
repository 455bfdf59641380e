#include "stabdeg/correlation.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "stabdeg/bit_kernel.hpp"
#include "stabdeg/errors.hpp"

namespace stabdeg {

Interaction Interaction::zero(const GroupSpec& group) {
  return Interaction{group, std::vector<Rational>(group.order(), Rational(0))};
}

Interaction Interaction::delta(const GroupSpec& group, std::size_t f, Rational value) {
  Interaction j = zero(group);
  j.values.at(f) = value;
  return j;
}

CorrelationVector correlate(const SpinConfig& sigma) {
  const GroupSpec& g = sigma.group();
  const std::size_t n = g.order();
  CorrelationVector out{g, std::vector<std::int64_t>(n, 0)};
  for (std::size_t f = 0; f < n; ++f) {
    std::int64_t sum = 0;
    for (std::size_t l = 0; l < n; ++l) sum += sigma[l] * sigma[g.add(l, f)];
    out.values[f] = sum;
  }
  return out;
}

CorrelationVector correlate_fast(const SpinConfig& sigma) {
  const GroupSpec& g = sigma.group();
  const std::size_t n = g.order();
  CorrelationVector out{g, std::vector<std::int64_t>(n, 0)};
  if (n <= 64) {
    BitKernel kernel(g);
    kernel.correlate(sigma.code(), out.values);
    return out;
  }
  // Wide groups: explicit translated bit vectors, then word-wise XOR/popcount.
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> base(words, 0), shifted(words, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (sigma.is_down(i)) base[i >> 6] |= std::uint64_t{1} << (i & 63);
  for (std::size_t f = 0; f < n; ++f) {
    std::fill(shifted.begin(), shifted.end(), 0);
    for (std::size_t l = 0; l < n; ++l)
      if (sigma.is_down(g.add(l, f))) shifted[l >> 6] |= std::uint64_t{1} << (l & 63);
    std::int64_t dist = 0;
    for (std::size_t w = 0; w < words; ++w) dist += std::popcount(base[w] ^ shifted[w]);
    out.values[f] = static_cast<std::int64_t>(n) - 2 * dist;
  }
  return out;
}

ExtendedCorrelation extended_correlate(const SpinConfig& sigma) {
  return ExtendedCorrelation{correlate_fast(sigma), sigma.magnetization()};
}

Rational energy(const CorrelationVector& corr, const Interaction& j) {
  require_same_group(corr.group, j.group);
  Rational e(0);
  for (std::size_t f = 0; f < corr.values.size(); ++f) e += j.values[f] * corr.values[f];
  return e;
}

Rational energy(const SpinConfig& sigma, const Interaction& j) {
  require_same_group(sigma.group(), j.group);
  return energy(correlate_fast(sigma), j);
}

Interaction even_projection(const Interaction& j) {
  Interaction out = Interaction::zero(j.group);
  for (std::size_t f = 0; f < j.values.size(); ++f)
    out.values[f] = (j.values[f] + j.values[j.group.neg(f)]) / Rational(2);
  return out;
}

bool in_correlation_lattice(const CorrelationVector& corr) {
  const auto n = static_cast<std::int64_t>(corr.group.order());
  if (corr.values.size() != corr.group.order() || corr.values[0] != n) return false;
  for (std::size_t f = 0; f < corr.values.size(); ++f) {
    const std::int64_t v = corr.values[f];
    if (v < -n || v > n || ((n - v) % 4) != 0) return false;
    if (corr.values[corr.group.neg(f)] != v) return false;
  }
  return true;
}

FourierPowerCheck fourier_power_check(const SpinConfig& sigma) {
  const GroupSpec& g = sigma.group();
  const auto n = static_cast<Eigen::Index>(g.order());
  const CorrelationVector corr = correlate_fast(sigma);

  Eigen::VectorXd a(n);
  for (Eigen::Index m = 0; m < n; ++m) a(m) = static_cast<double>(corr.values[static_cast<std::size_t>(m)]);

  // chi^(f)(m) = exp(2 pi i sum_k f_k m_k / n_k)
  Eigen::MatrixXcd chars(n, n);
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) elems.push_back(g.decode(static_cast<std::size_t>(i)));
  for (Eigen::Index f = 0; f < n; ++f)
    for (Eigen::Index m = 0; m < n; ++m) {
      double phase = 0.0;
      for (std::size_t k = 0; k < g.rank(); ++k) {
        const std::int64_t nk = g.factors()[k];
        const std::int64_t prod = (elems[f].residues[k] * elems[m].residues[k]) % nk;
        phase += static_cast<double>(prod) / static_cast<double>(nk);
      }
      chars(f, m) = std::polar(1.0, 2.0 * std::numbers::pi * phase);
    }

  const Eigen::VectorXcd spectrum = chars * a.cast<std::complex<double>>() / std::sqrt(static_cast<double>(n));
  return FourierPowerCheck{spectrum.real().minCoeff(), spectrum.imag().cwiseAbs().maxCoeff()};
}

}  // namespace stabdeg
