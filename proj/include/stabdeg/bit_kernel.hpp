#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "stabdeg/group.hpp"

namespace stabdeg {

/// 128-bit fingerprint of a correlation vector.
struct CorrKey {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  friend bool operator==(const CorrKey&, const CorrKey&) = default;
  friend auto operator<=>(const CorrKey&, const CorrKey&) = default;
};

struct CorrKeyHash {
  std::size_t operator()(const CorrKey& k) const noexcept {
    std::uint64_t h = k.lo * 0x9E3779B97F4A7C15ull;
    h ^= (k.hi + 0x632BE59BD9B4E019ull) * 0xC2B2AE3D27D4EB4Full;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Word-level spin operations for groups with |F| <= 64.
///
/// Configurations are packed codes as produced by SpinConfig::code(): element
/// index i sits at bit n-1-i. Translations are rotations inside aligned
/// super-blocks, one per cyclic factor, so every group element acts in O(rank).
class BitKernel {
 public:
  explicit BitKernel(const GroupSpec& group);

  const GroupSpec& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return n_; }
  std::uint64_t full_mask() const noexcept { return full_; }

  /// (T_t sigma)_f = sigma_{f+t}.
  std::uint64_t translate(std::uint64_t code, std::size_t t) const noexcept {
    for (const Rotation& r : translations_[t]) code = r.apply(code);
    return code;
  }
  /// (R sigma)_f = sigma_{-f}.
  std::uint64_t reflect(std::uint64_t code) const noexcept {
    std::uint64_t z = std::uint64_t(reverse64(code) >> (64 - n_));
    for (const Rotation& r : reflection_) z = r.apply(z);
    return z;
  }
  /// (Phi_{(s,t,r)} sigma)_f = s sigma_{r f + t}.
  std::uint64_t act(std::uint64_t code, int s, std::size_t t, int r) const noexcept {
    std::uint64_t y = translate(code, t);
    if (r < 0) y = reflect(y);
    return s < 0 ? y ^ full_ : y;
  }

  /// A(sigma)_f = |F| - 2 popcount(sigma XOR T_f sigma).
  std::int64_t correlation(std::uint64_t code, std::size_t f) const noexcept {
    return static_cast<std::int64_t>(n_) - 2 * std::popcount(code ^ translate(code, f));
  }
  void correlate(std::uint64_t code, std::span<std::int64_t> out) const;

  /// Elements f != 0 with index(f) <= index(-f); A is determined by these values.
  const std::vector<std::size_t>& key_elements() const noexcept { return key_elements_; }
  /// True when key() is an injective packing rather than a hash.
  bool key_is_exact() const noexcept { return exact_key_; }
  CorrKey key(std::uint64_t code) const noexcept;

  /// |S_F(sigma)|, counted over all 4|F| elements.
  std::size_t stabilizer_order(std::uint64_t code) const noexcept;
  std::size_t orbit_size(std::uint64_t code) const noexcept { return 4 * n_ / stabilizer_order(code); }
  /// Least code in the Phi-orbit (least in text order).
  std::uint64_t orbit_min(std::uint64_t code) const noexcept;
  bool is_orbit_min(std::uint64_t code) const noexcept;

  static std::uint64_t reverse64(std::uint64_t x) noexcept {
    x = ((x >> 1) & 0x5555555555555555ull) | ((x & 0x5555555555555555ull) << 1);
    x = ((x >> 2) & 0x3333333333333333ull) | ((x & 0x3333333333333333ull) << 2);
    x = ((x >> 4) & 0x0F0F0F0F0F0F0F0Full) | ((x & 0x0F0F0F0F0F0F0F0Full) << 4);
    x = ((x >> 8) & 0x00FF00FF00FF00FFull) | ((x & 0x00FF00FF00FF00FFull) << 8);
    x = ((x >> 16) & 0x0000FFFF0000FFFFull) | ((x & 0x0000FFFF0000FFFFull) << 16);
    return (x >> 32) | (x << 32);
  }

 private:
  // Rotation by `shift` bits inside every aligned block of `block` bits:
  // result bit p takes source bit base + ((p - base + shift) mod block).
  struct Rotation {
    unsigned shift = 0;
    unsigned back = 0;  // block - shift
    std::uint64_t lo_mask = 0;
    std::uint64_t hi_mask = 0;

    std::uint64_t apply(std::uint64_t x) const noexcept {
      return ((x >> shift) & lo_mask) | ((x << back) & hi_mask);
    }
  };

  Rotation make_rotation(std::size_t shift, std::size_t block) const;

  GroupSpec group_;
  std::size_t n_ = 0;
  std::uint64_t full_ = 0;
  std::vector<std::vector<Rotation>> translations_;
  std::vector<Rotation> reflection_;
  std::vector<std::size_t> key_elements_;
  unsigned key_width_ = 0;
  bool exact_key_ = true;
};

}  // namespace stabdeg
