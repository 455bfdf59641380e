#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabdeg/correlation.hpp"
#include "stabdeg/degeneracy.hpp"
#include "stabdeg/spin.hpp"

namespace stabdeg {

/// (Delta h)_f = (h_{f-1} - 2 h_f + h_{f+1}) / 4 on cyclic F; the division must be exact.
std::vector<std::int64_t> laplacian(const CorrelationVector& h);

/// Cyclic run lengths (m_1, ..., m_2k) of alternating blocks, the first a +1 block.
struct BlockProfile {
  std::vector<std::int64_t> m;

  std::int64_t n() const;
  std::size_t k() const { return m.size() / 2; }
  friend bool operator==(const BlockProfile&, const BlockProfile&) = default;
  friend auto operator<=>(const BlockProfile&, const BlockProfile&) = default;
};

/// Rotates sigma so index 0 opens a +1 block. Constant sigma gives the empty profile.
BlockProfile blocks_of(const SpinConfig& sigma);
/// The configuration (+1)^{m_1} (-1)^{m_2} ... on Z/NZ.
SpinConfig config_of(const BlockProfile& profile);
/// Least sequence over all rotations and reversals of the cyclic sequence.
BlockProfile dihedral_normal_form(const BlockProfile& profile);
/// Block lengths sorted ascending.
std::vector<std::int64_t> block_multiset(const BlockProfile& profile);

/// Pairs (t, c), 0 < t <= N, c != 0, ascending in t; t = N stands for the value at 0.
struct SignedMultiset {
  std::int64_t n = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> terms;

  static SignedMultiset from_vector(const std::vector<std::int64_t>& values);
  std::vector<std::int64_t> to_vector() const;
  friend bool operator==(const SignedMultiset&, const SignedMultiset&) = default;
};

/// Interval sums of the profile: odd numbers of consecutive blocks count +1,
/// even numbers -1, taken over every start and every length 1..2k.
SignedMultiset delta_from_profile(const BlockProfile& profile);

std::int64_t l1_norm(const std::vector<std::int64_t>& values);

/// All 2^{2k} subset sums of the block lengths are distinct.
bool subset_sum_injective(const BlockProfile& profile);

/// Every profile class (in dihedral normal form, ascending) whose Laplacian
/// equals `delta` on Z/NZ. Throws DomainError when none exists.
std::vector<BlockProfile> reconstruct_from_delta(const SignedMultiset& delta, std::int64_t n);

struct RigidityReport {
  std::int64_t n = 0;
  std::uint64_t checked = 0;     // configurations with at most four blocks
  std::uint64_t rigid = 0;       // of those, d_stab = d_sym
  std::optional<std::string> counterexample;

  bool ok() const { return checked == rigid; }
};

/// Compares d_stab with d_sym for every configuration on Z/NZ with <= 4 blocks.
RigidityReport verify_four_block_rigidity(std::int64_t n, const EnumerationOptions& opts = {});

}  // namespace stabdeg
