#include "stabdeg/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "stabdeg/errors.hpp"

namespace stabdeg {

namespace {

// Keeps element tables (automorphisms, quotient images) addressable.
constexpr std::size_t kMaxOrder = std::size_t{1} << 24;

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  strides_.assign(factors_.size(), 1);
  order_ = 1;
  exponent_ = 1;
  for (std::size_t k = factors_.size(); k-- > 0;) {
    const std::int64_t n = factors_[k];
    if (n < 2) throw DomainError("cyclic factor must be >= 2, got " + std::to_string(n));
    strides_[k] = order_;
    if (order_ > kMaxOrder / static_cast<std::size_t>(n))
      throw DomainError("group order exceeds supported maximum");
    order_ *= static_cast<std::size_t>(n);
    exponent_ = std::lcm(exponent_, n);
  }
}

GroupSpec GroupSpec::cyclic(std::int64_t n) { return GroupSpec({n}); }

GroupSpec GroupSpec::parse(std::string_view text) {
  std::vector<std::int64_t> factors;
  std::size_t pos = 0;
  const auto fail = [&](const std::string& why) {
    throw ParseError("invalid group spec '" + std::string(text) + "': " + why);
  };
  if (text.empty()) fail("empty");
  while (true) {
    if (pos >= text.size() || text[pos] != 'Z') fail("expected 'Z'");
    ++pos;
    std::int64_t n = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr == first) fail("expected factor order");
    pos += static_cast<std::size_t>(ptr - first);
    if (n < 2) fail("factor must be >= 2");
    factors.push_back(n);
    if (pos == text.size()) break;
    if (text[pos] != 'x') fail("expected 'x' between factors");
    ++pos;
  }
  try {
    return GroupSpec(std::move(factors));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::size_t GroupSpec::index(const GroupElement& e) const {
  if (!contains(e)) throw GroupMismatch("element does not belong to " + to_string());
  std::size_t idx = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    idx += static_cast<std::size_t>(e.residues[k]) * strides_[k];
  return idx;
}

GroupElement GroupSpec::decode(std::size_t index) const {
  if (index >= order_) throw GroupMismatch("index out of range for " + to_string());
  GroupElement e;
  e.residues.resize(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    e.residues[k] = static_cast<std::int64_t>(index / strides_[k]);
    index %= strides_[k];
  }
  return e;
}

bool GroupSpec::contains(const GroupElement& e) const noexcept {
  if (e.residues.size() != factors_.size()) return false;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (e.residues[k] < 0 || e.residues[k] >= factors_[k]) return false;
  return true;
}

std::size_t GroupSpec::add(std::size_t a, std::size_t b) const noexcept {
  std::size_t out = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const auto n = static_cast<std::size_t>(factors_[k]);
    const std::size_t da = (a / strides_[k]) % n;
    const std::size_t db = (b / strides_[k]) % n;
    out += ((da + db) % n) * strides_[k];
  }
  return out;
}

std::size_t GroupSpec::neg(std::size_t a) const noexcept {
  std::size_t out = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const auto n = static_cast<std::size_t>(factors_[k]);
    const std::size_t da = (a / strides_[k]) % n;
    out += ((n - da) % n) * strides_[k];
  }
  return out;
}

std::size_t GroupSpec::sub(std::size_t a, std::size_t b) const noexcept { return add(a, neg(b)); }

std::size_t GroupSpec::scale(std::size_t a, std::int64_t k) const noexcept {
  std::size_t out = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const std::int64_t n = factors_[j];
    const auto da = static_cast<std::int64_t>((a / strides_[j]) % static_cast<std::size_t>(n));
    out += static_cast<std::size_t>(mod(mod(k, n) * da, n)) * strides_[j];
  }
  return out;
}

std::string GroupSpec::to_string() const {
  if (factors_.empty()) return "Z1";
  std::string out;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) out += 'x';
    out += 'Z' + std::to_string(factors_[k]);
  }
  return out;
}

GroupElement add(const GroupSpec& group, const GroupElement& a, const GroupElement& b) {
  return group.decode(group.add(group.index(a), group.index(b)));
}

GroupElement neg(const GroupSpec& group, const GroupElement& a) {
  return group.decode(group.neg(group.index(a)));
}

Automorphism Automorphism::unit(const GroupSpec& group, std::int64_t a) {
  if (!group.is_cyclic()) throw DomainError("unit automorphisms need a cyclic group");
  const std::int64_t n = group.factors()[0];
  a = mod(a, n);
  if (std::gcd(a, n) != 1) throw DomainError(std::to_string(a) + " is not a unit mod " + std::to_string(n));
  std::vector<std::size_t> table(group.order());
  for (std::size_t x = 0; x < table.size(); ++x)
    table[x] = static_cast<std::size_t>(mod(static_cast<std::int64_t>(x) * a, n));
  return Automorphism(group, std::move(table), a);
}

Automorphism Automorphism::from_table(const GroupSpec& group, std::vector<std::size_t> table) {
  const std::size_t n = group.order();
  if (table.size() != n) throw DomainError("automorphism table has wrong length");
  std::vector<bool> hit(n, false);
  for (std::size_t v : table) {
    if (v >= n || hit[v]) throw DomainError("automorphism table is not a bijection");
    hit[v] = true;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (table[group.add(x, y)] != group.add(table[x], table[y]))
        throw DomainError("automorphism table is not additive");
  return Automorphism(group, std::move(table), 0);
}

Automorphism Automorphism::inverse() const {
  std::vector<std::size_t> inv(table_.size());
  for (std::size_t x = 0; x < table_.size(); ++x) inv[table_[x]] = x;
  std::int64_t m = 0;
  if (multiplier_ != 0) {
    const std::int64_t n = group_.factors()[0];
    for (std::int64_t b = 1; b < n; ++b)
      if (mod(b * multiplier_, n) == 1 % n) {
        m = b;
        break;
      }
    if (n == 2) m = 1;
  }
  return Automorphism(group_, std::move(inv), m);
}

std::vector<Automorphism> automorphisms(const GroupSpec& group) {
  if (!group.is_cyclic())
    throw DomainError("built-in automorphism enumeration supports cyclic groups only; supply tables for " +
                      group.to_string());
  const std::int64_t n = group.factors()[0];
  std::vector<Automorphism> out;
  for (std::int64_t a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) out.push_back(Automorphism::unit(group, a));
  return out;
}

QuotientMap quotient_map(const GroupSpec& group, const std::vector<GroupElement>& generators) {
  // Smith-style diagonalisation of the relation lattice of F/U; only the column
  // transform Q is needed since pi(x) = (x Q)_i mod d_i.
  const std::size_t d = group.rank();
  std::vector<std::vector<std::int64_t>> rel;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<std::int64_t> row(d, 0);
    row[k] = group.factors()[k];
    rel.push_back(std::move(row));
  }
  for (const GroupElement& g : generators) {
    if (!group.contains(g)) throw GroupMismatch("subgroup generator does not belong to " + group.to_string());
    rel.push_back(g.residues);
  }
  std::vector<std::vector<std::int64_t>> q(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t k = 0; k < d; ++k) q[k][k] = 1;

  const std::size_t rows = rel.size();
  const auto col_op = [&](std::size_t dst, std::size_t src, std::int64_t f) {  // col dst -= f * col src
    for (auto& r : rel) r[dst] -= f * r[src];
    for (auto& r : q) r[dst] -= f * r[src];
  };
  const auto col_swap = [&](std::size_t a, std::size_t b) {
    for (auto& r : rel) std::swap(r[a], r[b]);
    for (auto& r : q) std::swap(r[a], r[b]);
  };

  for (std::size_t t = 0; t < d; ++t) {
    while (true) {
      // Pivot: smallest nonzero entry in the remaining block.
      std::size_t pr = rows, pc = d;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < d; ++c)
          if (rel[r][c] != 0 && (pr == rows || std::llabs(rel[r][c]) < std::llabs(rel[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) break;
      std::swap(rel[t], rel[pr]);
      if (pc != t) col_swap(t, pc);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const std::int64_t f = rel[r][t] / rel[t][t];
        if (f != 0)
          for (std::size_t c = t; c < d; ++c) rel[r][c] -= f * rel[t][c];
        if (rel[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < d; ++c) {
        const std::int64_t f = rel[t][c] / rel[t][t];
        if (f != 0) col_op(c, t, f);
        if (rel[t][c] != 0) clean = false;
      }
      if (clean) break;
    }
  }

  std::vector<std::int64_t> diag(d);
  for (std::size_t t = 0; t < d; ++t) diag[t] = std::llabs(rel[t][t]);
  std::vector<std::int64_t> factors;
  std::vector<std::size_t> kept;
  for (std::size_t t = 0; t < d; ++t)
    if (diag[t] > 1) {
      factors.push_back(diag[t]);
      kept.push_back(t);
    }

  QuotientMap out;
  out.source = group;
  out.target = GroupSpec(factors);
  out.image.resize(group.order());
  for (std::size_t x = 0; x < group.order(); ++x) {
    const GroupElement e = group.decode(x);
    GroupElement img;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      const std::size_t col = kept[j];
      std::int64_t v = 0;
      for (std::size_t k = 0; k < d; ++k) v = mod(v + mod(e.residues[k] * mod(q[k][col], diag[col]), diag[col]), diag[col]);
      img.residues.push_back(v);
    }
    out.image[x] = out.target.index(img);
  }
  out.kernel_order = group.order() / out.target.order();
  return out;
}

}  // namespace stabdeg
