#include "stabdeg/bit_kernel.hpp"

#include <algorithm>

#include "stabdeg/errors.hpp"

namespace stabdeg {

BitKernel::BitKernel(const GroupSpec& group) : group_(group), n_(group.order()) {
  if (n_ == 0 || n_ > 64) throw DomainError("bit kernel needs 1 <= |F| <= 64, got " + group.to_string());
  full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;

  // Bit position p = n-1-i has the mixed-radix digits n_k-1-a_k of index i, so
  // adding t_k to a digit of i subtracts it from the digit of p.
  translations_.resize(n_);
  for (std::size_t t = 0; t < n_; ++t) {
    for (std::size_t k = 0; k < group.rank(); ++k) {
      const auto nk = static_cast<std::size_t>(group.factors()[k]);
      const std::size_t sk = group.stride(k);
      const std::size_t tk = (t / sk) % nk;
      if (tk != 0) translations_[t].push_back(make_rotation(((nk - tk) % nk) * sk, nk * sk));
    }
  }
  // Full reversal maps digits b -> n_k-1-b; negation additionally needs one step.
  for (std::size_t k = 0; k < group.rank(); ++k) {
    const auto nk = static_cast<std::size_t>(group.factors()[k]);
    reflection_.push_back(make_rotation(group.stride(k), nk * group.stride(k)));
  }

  for (std::size_t f = 1; f < n_; ++f)
    if (f <= group.neg(f)) key_elements_.push_back(f);
  key_width_ = static_cast<unsigned>(std::bit_width(n_ / 2));
  exact_key_ = key_elements_.size() * key_width_ <= 128;
}

BitKernel::Rotation BitKernel::make_rotation(std::size_t shift, std::size_t block) const {
  Rotation r;
  r.shift = static_cast<unsigned>(shift);
  r.back = static_cast<unsigned>(block - shift);
  for (std::size_t p = 0; p < n_; ++p) {
    const std::size_t o = p % block;
    if (o < block - shift)
      r.lo_mask |= std::uint64_t{1} << p;
    else
      r.hi_mask |= std::uint64_t{1} << p;
  }
  return r;
}

void BitKernel::correlate(std::uint64_t code, std::span<std::int64_t> out) const {
  if (out.size() != n_) throw DomainError("correlation buffer has wrong length");
  for (std::size_t f = 0; f < n_; ++f) out[f] = correlation(code, f);
}

CorrKey BitKernel::key(std::uint64_t code) const noexcept {
  if (exact_key_) {
    unsigned __int128 acc = 0;
    for (std::size_t f : key_elements_) {
      const auto v = static_cast<unsigned>(std::popcount(code ^ translate(code, f)) >> 1);
      acc = (acc << key_width_) | v;
    }
    return {static_cast<std::uint64_t>(acc >> 64), static_cast<std::uint64_t>(acc)};
  }
  std::uint64_t h1 = 0x243F6A8885A308D3ull;
  std::uint64_t h2 = 0x13198A2E03707344ull;
  for (std::size_t f : key_elements_) {
    const auto v = static_cast<std::uint64_t>(std::popcount(code ^ translate(code, f)) >> 1);
    h1 = (h1 ^ v) * 0x100000001B3ull;
    h1 ^= h1 >> 31;
    h2 = (h2 + v + 0x9E3779B97F4A7C15ull) * 0xBF58476D1CE4E5B9ull;
    h2 ^= h2 >> 27;
  }
  return {h1, h2};
}

std::size_t BitKernel::stabilizer_order(std::uint64_t code) const noexcept {
  std::size_t count = 0;
  for (std::size_t t = 0; t < n_; ++t) {
    const std::uint64_t y = translate(code, t);
    const std::uint64_t z = reflect(y);
    count += (y == code) + ((y ^ full_) == code) + (z == code) + ((z ^ full_) == code);
  }
  return count;
}

std::uint64_t BitKernel::orbit_min(std::uint64_t code) const noexcept {
  std::uint64_t best = code;
  for (std::size_t t = 0; t < n_; ++t) {
    const std::uint64_t y = translate(code, t);
    const std::uint64_t z = reflect(y);
    best = std::min({best, y, y ^ full_, z, z ^ full_});
  }
  return best;
}

bool BitKernel::is_orbit_min(std::uint64_t code) const noexcept {
  // Index 0 spin down means the flipped image is smaller.
  if ((code >> (n_ - 1)) & 1u) return false;
  for (std::size_t t = 0; t < n_; ++t) {
    const std::uint64_t y = translate(code, t);
    if (y < code || (y ^ full_) < code) return false;
    const std::uint64_t z = reflect(y);
    if (z < code || (z ^ full_) < code) return false;
  }
  return true;
}

}  // namespace stabdeg
