#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stabdeg {

/// An element of a finite abelian group, as residues (a_1, ..., a_d) with 0 <= a_i < n_i.
struct GroupElement {
  std::vector<std::int64_t> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// A finite abelian group F = Z/n_1 (+) ... (+) Z/n_d.
///
/// Elements are enumerated in mixed radix with the first declared factor most
/// significant. This enumeration fixes the bit position of every spin in a
/// SpinConfig, so it must never change.
class GroupSpec {
 public:
  /// Trivial group (no factors, order 1).
  GroupSpec() = default;
  explicit GroupSpec(std::vector<std::int64_t> factors);

  /// Parses `Z<n>(xZ<n>)*`, each n >= 2.
  static GroupSpec parse(std::string_view text);
  static GroupSpec cyclic(std::int64_t n);

  const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  std::size_t order() const noexcept { return order_; }
  std::int64_t exponent() const noexcept { return exponent_; }
  bool is_cyclic() const noexcept { return factors_.size() == 1; }
  /// Stride of factor k in the linear index.
  std::size_t stride(std::size_t k) const { return strides_.at(k); }

  std::size_t index(const GroupElement& e) const;
  GroupElement decode(std::size_t index) const;
  bool contains(const GroupElement& e) const noexcept;

  std::size_t add(std::size_t a, std::size_t b) const noexcept;
  std::size_t sub(std::size_t a, std::size_t b) const noexcept;
  std::size_t neg(std::size_t a) const noexcept;
  /// k-fold sum of a (k may be negative).
  std::size_t scale(std::size_t a, std::int64_t k) const noexcept;

  /// Canonical text, e.g. "Z2xZ4".
  std::string to_string() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<std::int64_t> factors_;
  std::vector<std::size_t> strides_;
  std::size_t order_ = 1;
  std::int64_t exponent_ = 1;
};

inline GroupSpec parse_group_spec(std::string_view text) { return GroupSpec::parse(text); }

GroupElement add(const GroupSpec& group, const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupSpec& group, const GroupElement& a);

/// An automorphism of F, stored as a permutation table on element indices.
class Automorphism {
 public:
  /// Multiplication by a unit a of Z/NZ. F must be cyclic and gcd(a, N) = 1.
  static Automorphism unit(const GroupSpec& group, std::int64_t a);
  /// Explicit table phi(index) -> index; validated to be an additive bijection.
  static Automorphism from_table(const GroupSpec& group, std::vector<std::size_t> table);

  const GroupSpec& group() const noexcept { return group_; }
  std::size_t operator()(std::size_t index) const { return table_[index]; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }
  /// The unit multiplier for cyclic automorphisms built by unit(); 0 for tables.
  std::int64_t multiplier() const noexcept { return multiplier_; }
  Automorphism inverse() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.group_ == b.group_ && a.table_ == b.table_;
  }

 private:
  Automorphism(GroupSpec group, std::vector<std::size_t> table, std::int64_t multiplier)
      : group_(std::move(group)), table_(std::move(table)), multiplier_(multiplier) {}

  GroupSpec group_;
  std::vector<std::size_t> table_;
  std::int64_t multiplier_ = 0;
};

/// All units of Z/NZ as automorphisms, ascending by multiplier. Cyclic groups only.
std::vector<Automorphism> automorphisms(const GroupSpec& group);

/// The canonical surjection F -> F/U.
struct QuotientMap {
  GroupSpec source;
  GroupSpec target;
  std::vector<std::size_t> image;  // source index -> target index
  std::size_t kernel_order = 1;

  std::size_t operator()(std::size_t index) const { return image[index]; }
};

/// F' = F/U for U generated by `generators`, with F' written as a direct sum of
/// cyclic factors (trivial factors dropped) and pi the induced homomorphism.
QuotientMap quotient_map(const GroupSpec& group, const std::vector<GroupElement>& generators);

}  // namespace stabdeg
