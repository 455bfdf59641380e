#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "stabdeg/group.hpp"
#include "stabdeg/spin.hpp"

namespace stabdeg {

bool is_prime(std::int64_t n);
/// (a / p) for an odd prime p, in {-1, 0, 1}.
int legendre_symbol(std::int64_t a, std::int64_t p);
std::int64_t euler_phi(std::int64_t n);

/// sigma_0 = sign, sigma_k = (k / N). N must be an odd prime.
SpinConfig legendre_config(std::int64_t n, int sign);

/// GF(p^n) as F_p[X] modulo `modulus` (low degree first, monic of degree n).
struct FieldSpec {
  std::int64_t p = 2;
  int degree = 1;
  std::vector<std::int64_t> modulus;

  std::int64_t order() const;
};

/// Lexicographically smallest monic irreducible polynomial of the given degree,
/// comparing coefficients from X^{n-1} down to the constant.
FieldSpec default_field(std::int64_t p, int degree);

/// Field arithmetic on element codes 0..q-1: the base-p digits of a code are
/// the polynomial coefficients, constant term least significant.
class GaloisField {
 public:
  explicit GaloisField(FieldSpec spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::int64_t order() const noexcept { return q_; }
  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[a]; }
  /// a != 0.
  int inv(int a) const;

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * q_ + b; }

  FieldSpec spec_;
  std::int64_t q_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
};

/// A subset of Z/NZ with N = q^2 + q + 1; members sorted.
struct DifferenceSet {
  std::int64_t n = 0;
  std::int64_t q = 0;
  std::vector<std::int64_t> members;

  friend bool operator==(const DifferenceSet&, const DifferenceSet&) = default;
};

/// Every nonzero residue is d2 - d1 for exactly one ordered pair of members.
bool is_perfect(std::int64_t n, const std::vector<std::int64_t>& members);

struct SingerResult {
  DifferenceSet set;
  /// (c2, c1, c0) as field element codes of X^3 - c2 X^2 - c1 X - c0.
  std::array<int, 3> cubic{};
  FieldSpec field;
};

/// D(A_0, A_0 A_1) for the orbit A_k = M^k A_0 of the companion collineation.
/// Without a cubic the lexicographically first primitive one over (c2, c1, c0) is used.
SingerResult singer_difference_set(std::int64_t p, int degree,
                                   std::optional<std::array<int, 3>> cubic = std::nullopt);

/// sigma_k = -1 exactly when k is in the subset.
SpinConfig config_from_subset(std::int64_t n, const std::vector<std::int64_t>& subset);

/// q = p^n; returns {p, n}, or nullopt if q is not a prime power.
std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t q);

/// All perfect difference sets mod q^2+q+1 with q+1 members containing 0 and 1,
/// by exhaustive search. q <= 8.
std::vector<DifferenceSet> reduced_difference_sets(std::int64_t q);
/// phi(N) / (3n) for q = p^n.
std::int64_t expected_reduced_count(std::int64_t q);

/// sigma_{(f1, f2)} = sigma1_{f1} sigma2_{f2} over F1 + F2.
SpinConfig product_config(const SpinConfig& sigma1, const SpinConfig& sigma2);

/// sigma = pi^* tau, i.e. sigma_f = tau_{pi(f)}.
SpinConfig periodic_lift(const SpinConfig& tau, const QuotientMap& pi);

}  // namespace stabdeg
