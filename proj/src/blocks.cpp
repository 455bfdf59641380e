#include "stabdeg/blocks.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>

#include "stabdeg/bit_kernel.hpp"
#include "stabdeg/errors.hpp"
#include "stabdeg/parallel.hpp"

namespace stabdeg {

namespace {

void require_cyclic(const GroupSpec& group) {
  if (!group.is_cyclic()) throw DomainError("block structure needs a cyclic group, got " + group.to_string());
}

std::int64_t wrap(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

}  // namespace

std::vector<std::int64_t> laplacian(const CorrelationVector& h) {
  require_cyclic(h.group);
  const auto n = static_cast<std::int64_t>(h.values.size());
  std::vector<std::int64_t> out(h.values.size());
  for (std::int64_t f = 0; f < n; ++f) {
    const std::int64_t v = h.values[wrap(f - 1, n)] - 2 * h.values[f] + h.values[wrap(f + 1, n)];
    if (v % 4 != 0) throw DomainError("vector is not in the correlation lattice: Laplacian is not integral");
    out[f] = v / 4;
  }
  return out;
}

std::int64_t BlockProfile::n() const {
  std::int64_t s = 0;
  for (std::int64_t x : m) s += x;
  return s;
}

BlockProfile blocks_of(const SpinConfig& sigma) {
  require_cyclic(sigma.group());
  const std::size_t n = sigma.size();
  if (sigma.is_constant()) return {};
  std::size_t start = 0;
  while (!(sigma[start] == 1 && sigma[(start + n - 1) % n] == -1)) ++start;
  BlockProfile p;
  std::int64_t run = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t cur = (start + i) % n;
    if (i > 0 && sigma[cur] != sigma[(cur + n - 1) % n]) {
      p.m.push_back(run);
      run = 0;
    }
    ++run;
  }
  p.m.push_back(run);
  return p;
}

SpinConfig config_of(const BlockProfile& profile) {
  if (profile.m.empty() || profile.m.size() % 2 != 0) throw DomainError("profile needs an even, positive number of blocks");
  for (std::int64_t x : profile.m)
    if (x < 1) throw DomainError("block lengths must be positive");
  SpinConfig sigma(GroupSpec::cyclic(profile.n()));
  std::size_t pos = 0;
  for (std::size_t b = 0; b < profile.m.size(); ++b)
    for (std::int64_t i = 0; i < profile.m[b]; ++i) sigma.set(pos++, b % 2 == 0 ? 1 : -1);
  return sigma;
}

BlockProfile dihedral_normal_form(const BlockProfile& profile) {
  BlockProfile best = profile;
  std::vector<std::int64_t> seq = profile.m;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < seq.size(); ++r) {
      std::rotate(seq.begin(), seq.begin() + 1, seq.end());
      if (seq < best.m) best.m = seq;
    }
    std::reverse(seq.begin(), seq.end());
  }
  return best;
}

std::vector<std::int64_t> block_multiset(const BlockProfile& profile) {
  std::vector<std::int64_t> out = profile.m;
  std::sort(out.begin(), out.end());
  return out;
}

SignedMultiset SignedMultiset::from_vector(const std::vector<std::int64_t>& values) {
  SignedMultiset s;
  s.n = static_cast<std::int64_t>(values.size());
  for (std::int64_t t = 1; t <= s.n; ++t) {
    const std::int64_t c = values[static_cast<std::size_t>(t % s.n)];
    if (c != 0) s.terms.emplace_back(t, c);
  }
  return s;
}

std::vector<std::int64_t> SignedMultiset::to_vector() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
  for (const auto& [t, c] : terms) {
    if (t < 1 || t > n) throw DomainError("signed multiset entry outside 1.." + std::to_string(n));
    out[static_cast<std::size_t>(t % n)] += c;
  }
  return out;
}

SignedMultiset delta_from_profile(const BlockProfile& profile) {
  const std::int64_t n = profile.n();
  if (profile.m.empty()) return SignedMultiset{n, {}};
  if (profile.m.size() % 2 != 0) throw DomainError("profile needs an even number of blocks");
  const std::size_t b = profile.m.size();
  std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
  for (std::size_t start = 0; start < b; ++start) {
    std::int64_t sum = 0;
    for (std::size_t len = 1; len <= b; ++len) {
      sum += profile.m[(start + len - 1) % b];
      out[static_cast<std::size_t>(sum % n)] += len % 2 == 1 ? 1 : -1;
    }
  }
  return SignedMultiset::from_vector(out);
}

std::int64_t l1_norm(const std::vector<std::int64_t>& values) {
  std::int64_t s = 0;
  for (std::int64_t v : values) s += std::llabs(v);
  return s;
}

bool subset_sum_injective(const BlockProfile& profile) {
  const std::size_t b = profile.m.size();
  if (b > 26) throw BoundExceeded("subset-sum check limited to 26 blocks");
  std::vector<std::int64_t> sums{0};
  sums.reserve(std::size_t{1} << b);
  for (std::int64_t x : profile.m) {
    const std::size_t half = sums.size();
    for (std::size_t i = 0; i < half; ++i) sums.push_back(sums[i] + x);
  }
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

std::vector<BlockProfile> reconstruct_from_delta(const SignedMultiset& delta, std::int64_t n) {
  if (n < 2) throw DomainError("N must be at least 2");
  if (delta.n != n) throw DomainError("signed multiset belongs to N = " + std::to_string(delta.n));
  const std::vector<std::int64_t> target = delta.to_vector();
  if (std::all_of(target.begin(), target.end(), [](std::int64_t v) { return v == 0; }))
    return {BlockProfile{}};

  const std::int64_t blocks = -target[0];
  if (blocks < 2 || blocks % 2 != 0 || blocks > n)
    throw DomainError("value at 0 does not encode an even block count");
  const auto b = static_cast<std::size_t>(blocks);
  // The smallest block length is the least positive position with a nonzero
  // value, and it can be rotated to the front.
  std::int64_t m_min = 1;
  while (m_min < n && target[static_cast<std::size_t>(m_min)] == 0) ++m_min;
  if (m_min * blocks > n) throw DomainError("no profile found for the given signed multiset");

  std::vector<std::int64_t> residual = target;
  std::int64_t residual_l1 = l1_norm(residual);
  const std::int64_t total_intervals = blocks * blocks;
  std::vector<std::int64_t> m(b, 0), prefix(b + 1, 0);
  std::set<BlockProfile> found;

  auto bump = [&](std::int64_t sum, std::int64_t sign) {
    std::int64_t& r = residual[static_cast<std::size_t>(sum % n)];
    residual_l1 -= std::llabs(r);
    r -= sign;
    residual_l1 += std::llabs(r);
  };
  // Intervals ending at block p-1 that do not wrap.
  auto apply_block = [&](std::size_t p, std::int64_t dir) {
    for (std::size_t i = 0; i < p; ++i) bump(prefix[p] - prefix[i], dir * ((p - i) % 2 == 1 ? 1 : -1));
  };
  auto apply_wrapping = [&](std::int64_t dir) {
    for (std::size_t start = 1; start < b; ++start)
      for (std::size_t len = b - start + 1; len <= b; ++len) {
        const std::int64_t sum = (prefix[b] - prefix[start]) + prefix[start + len - b];
        bump(sum, dir * (len % 2 == 1 ? 1 : -1));
      }
  };

  auto search = [&](auto&& self, std::size_t p) -> void {
    if (p == b) {
      apply_wrapping(1);
      if (residual_l1 == 0) found.insert(dihedral_normal_form(BlockProfile{m}));
      apply_wrapping(-1);
      return;
    }
    const std::int64_t left = n - prefix[p];
    const auto remaining = static_cast<std::int64_t>(b - p);
    // The first block is m_min, the last one takes up what is left.
    const std::int64_t lo = remaining == 1 ? left : m_min;
    const std::int64_t hi = p == 0 ? m_min : left - (remaining - 1) * m_min;
    for (std::int64_t x = lo; x <= hi; ++x) {
      m[p] = x;
      prefix[p + 1] = prefix[p] + x;
      apply_block(p + 1, 1);
      const std::int64_t done = static_cast<std::int64_t>((p + 1) * (p + 2) / 2);
      if (residual_l1 <= total_intervals - done) self(self, p + 1);
      apply_block(p + 1, -1);
    }
  };
  search(search, 0);

  if (found.empty()) throw DomainError("no profile found for the given signed multiset");
  return {found.begin(), found.end()};
}

RigidityReport verify_four_block_rigidity(std::int64_t n, const EnumerationOptions& opts) {
  const GroupSpec group = GroupSpec::cyclic(n);
  const CorrelationImage image = CorrelationImage::compute(group, opts);
  const BitKernel& kernel = image.kernel();
  const std::uint64_t half = std::uint64_t{1} << (kernel.size() - 1);

  struct Part {
    std::uint64_t checked = 0;
    std::uint64_t rigid = 0;
    std::optional<std::uint64_t> bad;
  };
  std::vector<Part> parts(partition_slots(half, opts.partitions));
  run_partitioned(half, opts.partitions, [&](std::uint64_t begin, std::uint64_t end, std::size_t p) {
    Part& part = parts[p];
    for (std::uint64_t c = begin; c < end; ++c) {
      if (std::popcount(c ^ kernel.translate(c, 1)) > 4) continue;
      // c and its spin flip.
      part.checked += 2;
      if (image.fiber_size(kernel.key(c)) == kernel.orbit_size(c))
        part.rigid += 2;
      else if (!part.bad)
        part.bad = c;
    }
  });

  RigidityReport report;
  report.n = n;
  for (const Part& part : parts) {
    report.checked += part.checked;
    report.rigid += part.rigid;
    if (part.bad && !report.counterexample) report.counterexample = SpinConfig::from_code(group, *part.bad).to_string();
  }
  return report;
}

}  // namespace stabdeg
