#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stabdeg/group.hpp"

namespace stabdeg {

/// A configuration sigma in {-1, 1}^F.
///
/// Bit i is set when the spin at element index i equals -1. The text form is a
/// `+`/`-` string whose leftmost character is element index 0.
class SpinConfig {
 public:
  /// All spins up.
  explicit SpinConfig(GroupSpec group);

  static SpinConfig parse(const GroupSpec& group, std::string_view text);
  static SpinConfig from_signs(const GroupSpec& group, std::span<const int> signs);
  /// Inverse of code(); requires |F| <= 64.
  static SpinConfig from_code(const GroupSpec& group, std::uint64_t code);

  const GroupSpec& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return group_.order(); }

  bool is_down(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  int operator[](std::size_t i) const { return is_down(i) ? -1 : 1; }
  void set(std::size_t i, int sign);

  std::size_t down_count() const noexcept;
  std::int64_t magnetization() const noexcept;
  bool is_constant() const noexcept;

  SpinConfig operator-() const;

  /// Packed word for |F| <= 64 with element index 0 in the most significant
  /// of the |F| low bits, so integer order equals text order ('+' < '-').
  std::uint64_t code() const;

  std::string to_string() const;

  friend bool operator==(const SpinConfig& a, const SpinConfig& b) {
    return a.group_ == b.group_ && a.words_ == b.words_;
  }
  /// Text order.
  friend bool operator<(const SpinConfig& a, const SpinConfig& b);

 private:
  GroupSpec group_;
  std::vector<std::uint64_t> words_;
};

void require_same_group(const GroupSpec& a, const GroupSpec& b);

}  // namespace stabdeg
