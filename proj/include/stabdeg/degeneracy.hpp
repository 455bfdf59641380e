#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stabdeg/bit_kernel.hpp"
#include "stabdeg/correlation.hpp"
#include "stabdeg/group.hpp"
#include "stabdeg/rational.hpp"
#include "stabdeg/spin.hpp"

namespace stabdeg {

struct EnumerationOptions {
  /// Largest |F| for which 2^|F| configurations are enumerated.
  std::size_t bound = 28;
  /// Worker partitions; 0 means one per hardware thread.
  std::size_t partitions = 0;
  /// Keep full correlation vectors next to fingerprints and fail on any collision.
  bool verify_fingerprints = false;
};

/// Hard ceiling for `bound`, independent of user flags.
inline constexpr std::size_t kMaxEnumerationOrder = 40;

void check_enumeration_bound(const GroupSpec& group, const EnumerationOptions& opts);

/// Fiber sizes |A^-1(x)| for every x in A_F(G_F), keyed by fingerprint.
class CorrelationImage {
 public:
  static CorrelationImage compute(const GroupSpec& group, const EnumerationOptions& opts = {});

  const BitKernel& kernel() const noexcept { return kernel_; }
  std::size_t image_size() const noexcept { return counts_.size(); }
  std::uint64_t fiber_size(const CorrKey& key) const;
  std::uint64_t fiber_size(const SpinConfig& sigma) const;
  /// sum_x |A^-1(x)|^2 = sum_sigma D_stab(sigma).
  std::uint64_t sum_of_squares() const noexcept;
  /// (key, fiber size) pairs in key order.
  std::vector<std::pair<CorrKey, std::uint64_t>> sorted_entries() const;

 private:
  explicit CorrelationImage(const GroupSpec& group) : kernel_(group) {}

  BitKernel kernel_;
  std::unordered_map<CorrKey, std::uint64_t, CorrKeyHash> counts_;
};

/// All tau with A(tau) = A(sigma), in text order.
std::vector<SpinConfig> fiber(const SpinConfig& sigma, const EnumerationOptions& opts = {});
/// D_stab(sigma) = |A^-1(A(sigma))|.
std::uint64_t d_stab(const SpinConfig& sigma, const EnumerationOptions& opts = {});
/// Fiber size of the extended correlation (A, magnetization).
std::uint64_t d_stab_extended(const SpinConfig& sigma, const EnumerationOptions& opts = {});
/// D(sigma, j) = |{tau : H(tau, j) = H(sigma, j)}|, compared exactly.
std::uint64_t j_degeneracy(const SpinConfig& sigma, const Interaction& j, const EnumerationOptions& opts = {});

std::size_t image_size(const GroupSpec& group, const EnumerationOptions& opts = {});

struct MsdRow {
  std::size_t n = 0;
  std::uint64_t image_size = 0;
  Rational msd;                 // 2^N / image_size
  Rational msd_over_sym;        // msd / 4N
  Rational avg_dstab_over_sym;  // (2^-N sum_sigma D_stab) / 4N
};

MsdRow msd(const GroupSpec& group, const EnumerationOptions& opts = {});

/// 2^-N sum_sigma D_sym(sigma) / 4N, exact.
Rational average_dsym_over_sym(const GroupSpec& group, const EnumerationOptions& opts = {});

struct SurveyRow {
  std::size_t n = 0;
  std::string representative;
  std::uint64_t d_sym = 0;
  std::uint64_t d_stab = 0;
  Rational ratio;
};

/// One row per Phi-orbit (least representative), ascending, keeping rows with
/// d_stab / d_sym >= min_ratio.
std::vector<SurveyRow> survey(const GroupSpec& group, const Rational& min_ratio,
                              const EnumerationOptions& opts = {});

struct ProbeResult {
  std::size_t trials = 0;
  std::size_t equal = 0;        // trials with D(sigma, j) = D_stab(sigma)
  std::size_t violations = 0;   // trials with D(sigma, j) < D_stab(sigma); always 0
  std::uint64_t d_stab = 0;

  /// equal / trials, reported as 1 for an empty probe.
  Rational fraction() const { return trials == 0 ? Rational(1) : Rational(equal, trials); }
};

/// Samples integer j uniformly from [-10^6, 10^6]^F with SeededRng(seed).
ProbeResult generic_j_probe(const SpinConfig& sigma, std::size_t trials, std::uint64_t seed,
                            const EnumerationOptions& opts = {});

}  // namespace stabdeg
