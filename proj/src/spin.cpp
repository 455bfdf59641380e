#include "stabdeg/spin.hpp"

#include <bit>

#include "stabdeg/errors.hpp"

namespace stabdeg {

void require_same_group(const GroupSpec& a, const GroupSpec& b) {
  if (!(a == b)) throw GroupMismatch("group mismatch: " + a.to_string() + " vs " + b.to_string());
}

SpinConfig::SpinConfig(GroupSpec group) : group_(std::move(group)), words_((group_.order() + 63) / 64, 0) {}

SpinConfig SpinConfig::parse(const GroupSpec& group, std::string_view text) {
  if (text.size() != group.order())
    throw ParseError("config length " + std::to_string(text.size()) + " does not match |F| = " +
                     std::to_string(group.order()));
  SpinConfig s(group);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '-')
      s.set(i, -1);
    else if (text[i] != '+')
      throw ParseError("config characters must be '+' or '-'");
  }
  return s;
}

SpinConfig SpinConfig::from_signs(const GroupSpec& group, std::span<const int> signs) {
  if (signs.size() != group.order()) throw DomainError("sign vector length does not match |F|");
  SpinConfig s(group);
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw DomainError("spins must be +1 or -1");
    s.set(i, signs[i]);
  }
  return s;
}

SpinConfig SpinConfig::from_code(const GroupSpec& group, std::uint64_t code) {
  const std::size_t n = group.order();
  if (n > 64) throw DomainError("packed codes need |F| <= 64");
  SpinConfig s(group);
  for (std::size_t i = 0; i < n; ++i)
    if ((code >> (n - 1 - i)) & 1u) s.set(i, -1);
  return s;
}

void SpinConfig::set(std::size_t i, int sign) {
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (sign < 0)
    words_[i >> 6] |= bit;
  else
    words_[i >> 6] &= ~bit;
}

std::size_t SpinConfig::down_count() const noexcept {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::int64_t SpinConfig::magnetization() const noexcept {
  return static_cast<std::int64_t>(size()) - 2 * static_cast<std::int64_t>(down_count());
}

bool SpinConfig::is_constant() const noexcept {
  const std::size_t d = down_count();
  return d == 0 || d == size();
}

SpinConfig SpinConfig::operator-() const {
  SpinConfig out(*this);
  const std::size_t n = size();
  for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] = ~out.words_[w];
  if (n % 64) out.words_.back() &= (std::uint64_t{1} << (n % 64)) - 1;
  return out;
}

std::uint64_t SpinConfig::code() const {
  const std::size_t n = size();
  if (n > 64) throw DomainError("packed codes need |F| <= 64");
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (is_down(i)) c |= std::uint64_t{1} << (n - 1 - i);
  return c;
}

std::string SpinConfig::to_string() const {
  std::string out(size(), '+');
  for (std::size_t i = 0; i < size(); ++i)
    if (is_down(i)) out[i] = '-';
  return out;
}

bool operator<(const SpinConfig& a, const SpinConfig& b) {
  require_same_group(a.group_, b.group_);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.is_down(i) != b.is_down(i)) return b.is_down(i);
  return false;
}

}  // namespace stabdeg
