#include "stabdeg/degeneracy.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "stabdeg/errors.hpp"
#include "stabdeg/parallel.hpp"
#include "stabdeg/random.hpp"
#include "stabdeg/symmetry.hpp"

namespace stabdeg {

namespace {

// Configurations with index 0 spin up; A(-sigma) = A(sigma) covers the rest.
std::uint64_t half_space(const BitKernel& kernel) { return std::uint64_t{1} << (kernel.size() - 1); }

bool same_correlation(const BitKernel& kernel, std::uint64_t a, std::uint64_t b) {
  for (std::size_t f : kernel.key_elements())
    if (kernel.correlation(a, f) != kernel.correlation(b, f)) return false;
  return true;
}

// Matches a fixed configuration's correlation; the full comparison only runs
// when the key is a hash.
struct FiberTest {
  const BitKernel& kernel;
  std::uint64_t code;
  CorrKey key;

  bool operator()(std::uint64_t c) const {
    if (kernel.key(c) != key) return false;
    return kernel.key_is_exact() || same_correlation(kernel, c, code);
  }
};

// Integer couplings for the energy restricted to key elements.
struct ScaledEnergy {
  std::vector<std::size_t> elements;
  std::vector<std::int64_t> weights;
  __int128 constant = 0;

  __int128 operator()(const BitKernel& kernel, std::uint64_t code) const {
    __int128 e = constant;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (weights[i] != 0) e += static_cast<__int128>(weights[i]) * kernel.correlation(code, elements[i]);
    return e;
  }
};

ScaledEnergy scale_interaction(const BitKernel& kernel, const Interaction& j) {
  const GroupSpec& grp = kernel.group();
  require_same_group(grp, j.group);
  if (j.values.size() != grp.order()) throw DomainError("interaction has wrong length");
  std::int64_t den = 1;
  for (const Rational& v : j.values) {
    den = std::lcm(den, v.denominator());
    if (den > (std::int64_t{1} << 40)) throw DomainError("interaction denominators too large for exact comparison");
  }
  auto scaled = [&](std::size_t f) -> __int128 {
    const Rational& v = j.values[f];
    return static_cast<__int128>(v.numerator()) * (den / v.denominator());
  };
  ScaledEnergy out;
  out.constant = scaled(0) * static_cast<__int128>(grp.order());
  for (std::size_t f : kernel.key_elements()) {
    const std::size_t g = grp.neg(f);
    const __int128 w = g == f ? scaled(f) : scaled(f) + scaled(g);
    if (w > INT64_MAX || w < INT64_MIN) throw DomainError("interaction too large for exact comparison");
    out.elements.push_back(f);
    out.weights.push_back(static_cast<std::int64_t>(w));
  }
  return out;
}

// Calls fn(code, part) for every half-space code, partitioned.
template <class Fn>
void for_each_half(const BitKernel& kernel, std::size_t partitions, Fn&& fn) {
  run_partitioned(half_space(kernel), partitions, [&](std::uint64_t begin, std::uint64_t end, std::size_t part) {
    for (std::uint64_t c = begin; c < end; ++c) fn(c, part);
  });
}

std::uint64_t count_half(const BitKernel& kernel, std::size_t partitions,
                         const std::function<std::uint64_t(std::uint64_t)>& weight) {
  std::vector<std::uint64_t> partial(partition_slots(half_space(kernel), partitions), 0);
  for_each_half(kernel, partitions, [&](std::uint64_t c, std::size_t part) { partial[part] += weight(c); });
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

}  // namespace

void check_enumeration_bound(const GroupSpec& group, const EnumerationOptions& opts) {
  const std::size_t limit = std::min(opts.bound, kMaxEnumerationOrder);
  if (group.order() > limit)
    throw BoundExceeded("|F| = " + std::to_string(group.order()) + " exceeds the enumeration bound " +
                        std::to_string(limit));
}

CorrelationImage CorrelationImage::compute(const GroupSpec& group, const EnumerationOptions& opts) {
  check_enumeration_bound(group, opts);
  CorrelationImage image(group);
  const BitKernel& kernel = image.kernel_;
  const bool verify = opts.verify_fingerprints || !kernel.key_is_exact();

  using CountMap = std::unordered_map<CorrKey, std::uint64_t, CorrKeyHash>;
  using WitnessMap = std::unordered_map<CorrKey, std::uint64_t, CorrKeyHash>;
  const std::size_t slots = partition_slots(half_space(kernel), opts.partitions);
  std::vector<CountMap> counts(slots);
  std::vector<WitnessMap> witnesses(slots);

  for_each_half(kernel, opts.partitions, [&](std::uint64_t c, std::size_t part) {
    const CorrKey k = kernel.key(c);
    ++counts[part][k];
    if (verify) {
      auto [it, fresh] = witnesses[part].try_emplace(k, c);
      if (!fresh && !same_correlation(kernel, it->second, c))
        throw Error("correlation fingerprint collision on " + group.to_string());
    }
  });

  WitnessMap seen;
  for (std::size_t p = 0; p < slots; ++p) {
    for (const auto& [k, n] : counts[p]) image.counts_[k] += 2 * n;
    if (!verify) continue;
    for (const auto& [k, c] : witnesses[p]) {
      auto [it, fresh] = seen.try_emplace(k, c);
      if (!fresh && !same_correlation(kernel, it->second, c))
        throw Error("correlation fingerprint collision on " + group.to_string());
    }
  }
  return image;
}

std::uint64_t CorrelationImage::fiber_size(const CorrKey& key) const {
  const auto it = counts_.find(key);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t CorrelationImage::fiber_size(const SpinConfig& sigma) const {
  require_same_group(kernel_.group(), sigma.group());
  return fiber_size(kernel_.key(sigma.code()));
}

std::uint64_t CorrelationImage::sum_of_squares() const noexcept {
  std::uint64_t s = 0;
  for (const auto& [k, n] : counts_) s += n * n;
  return s;
}

std::vector<std::pair<CorrKey, std::uint64_t>> CorrelationImage::sorted_entries() const {
  std::vector<std::pair<CorrKey, std::uint64_t>> out(counts_.begin(), counts_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SpinConfig> fiber(const SpinConfig& sigma, const EnumerationOptions& opts) {
  check_enumeration_bound(sigma.group(), opts);
  const BitKernel kernel(sigma.group());
  const FiberTest match{kernel, sigma.code(), kernel.key(sigma.code())};

  std::vector<std::vector<std::uint64_t>> found(partition_slots(half_space(kernel), opts.partitions));
  for_each_half(kernel, opts.partitions, [&](std::uint64_t c, std::size_t part) {
    if (match(c)) found[part].push_back(c);
  });

  std::vector<std::uint64_t> codes;
  for (const auto& part : found) codes.insert(codes.end(), part.begin(), part.end());
  const std::size_t half = codes.size();
  for (std::size_t i = 0; i < half; ++i) codes.push_back(codes[i] ^ kernel.full_mask());
  std::sort(codes.begin(), codes.end());

  std::vector<SpinConfig> out;
  out.reserve(codes.size());
  for (std::uint64_t c : codes) out.push_back(SpinConfig::from_code(sigma.group(), c));
  return out;
}

std::uint64_t d_stab(const SpinConfig& sigma, const EnumerationOptions& opts) {
  check_enumeration_bound(sigma.group(), opts);
  const BitKernel kernel(sigma.group());
  const FiberTest match{kernel, sigma.code(), kernel.key(sigma.code())};
  return 2 * count_half(kernel, opts.partitions, [&](std::uint64_t c) -> std::uint64_t { return match(c); });
}

std::uint64_t d_stab_extended(const SpinConfig& sigma, const EnumerationOptions& opts) {
  check_enumeration_bound(sigma.group(), opts);
  const BitKernel kernel(sigma.group());
  const FiberTest match{kernel, sigma.code(), kernel.key(sigma.code())};
  const std::int64_t n = static_cast<std::int64_t>(kernel.size());
  const std::int64_t m = sigma.magnetization();
  return count_half(kernel, opts.partitions, [&](std::uint64_t c) -> std::uint64_t {
    if (!match(c)) return 0;
    const std::int64_t mc = n - 2 * std::popcount(c);
    return std::uint64_t(mc == m) + std::uint64_t(-mc == m);
  });
}

std::uint64_t j_degeneracy(const SpinConfig& sigma, const Interaction& j, const EnumerationOptions& opts) {
  check_enumeration_bound(sigma.group(), opts);
  const BitKernel kernel(sigma.group());
  const ScaledEnergy energy_of = scale_interaction(kernel, j);
  const __int128 target = energy_of(kernel, sigma.code());
  return 2 * count_half(kernel, opts.partitions,
                        [&](std::uint64_t c) -> std::uint64_t { return energy_of(kernel, c) == target; });
}

std::size_t image_size(const GroupSpec& group, const EnumerationOptions& opts) {
  return CorrelationImage::compute(group, opts).image_size();
}

MsdRow msd(const GroupSpec& group, const EnumerationOptions& opts) {
  const CorrelationImage image = CorrelationImage::compute(group, opts);
  const std::int64_t n = static_cast<std::int64_t>(group.order());
  const std::int64_t configs = std::int64_t{1} << n;
  const std::int64_t sym = 4 * n;
  MsdRow row;
  row.n = group.order();
  row.image_size = image.image_size();
  row.msd = Rational(configs, static_cast<std::int64_t>(row.image_size));
  row.msd_over_sym = row.msd / sym;
  row.avg_dstab_over_sym = Rational(static_cast<std::int64_t>(image.sum_of_squares()), configs) / sym;
  return row;
}

Rational average_dsym_over_sym(const GroupSpec& group, const EnumerationOptions& opts) {
  check_enumeration_bound(group, opts);
  const BitKernel kernel(group);
  // sigma and -sigma have equal orbit sizes.
  const std::uint64_t half_sum =
      count_half(kernel, opts.partitions, [&](std::uint64_t c) -> std::uint64_t { return kernel.orbit_size(c); });
  const std::int64_t n = static_cast<std::int64_t>(group.order());
  return Rational(static_cast<std::int64_t>(half_sum), std::int64_t{1} << (n - 1)) / (4 * n);
}

std::vector<SurveyRow> survey(const GroupSpec& group, const Rational& min_ratio, const EnumerationOptions& opts) {
  const CorrelationImage image = CorrelationImage::compute(group, opts);
  const BitKernel& kernel = image.kernel();

  struct Hit {
    std::uint64_t code;
    std::uint64_t d_sym;
    std::uint64_t d_stab;
  };
  std::vector<std::vector<Hit>> found(partition_slots(half_space(kernel), opts.partitions));
  for_each_half(kernel, opts.partitions, [&](std::uint64_t c, std::size_t part) {
    if (!kernel.is_orbit_min(c)) return;
    const std::uint64_t sym = kernel.orbit_size(c);
    const std::uint64_t stab = image.fiber_size(kernel.key(c));
    if (Rational(static_cast<std::int64_t>(stab), static_cast<std::int64_t>(sym)) >= min_ratio)
      found[part].push_back({c, sym, stab});
  });

  std::vector<SurveyRow> rows;
  for (const auto& part : found)
    for (const Hit& h : part)
      rows.push_back(SurveyRow{group.order(), SpinConfig::from_code(group, h.code).to_string(), h.d_sym, h.d_stab,
                               Rational(static_cast<std::int64_t>(h.d_stab), static_cast<std::int64_t>(h.d_sym))});
  return rows;
}

ProbeResult generic_j_probe(const SpinConfig& sigma, std::size_t trials, std::uint64_t seed,
                            const EnumerationOptions& opts) {
  check_enumeration_bound(sigma.group(), opts);
  const GroupSpec& grp = sigma.group();
  const BitKernel kernel(grp);

  // One witness per correlation vector; energies only depend on the vector.
  struct Class {
    std::uint64_t witness;
    std::uint64_t size;
  };
  std::vector<Class> classes;
  {
    std::vector<std::unordered_map<CorrKey, Class, CorrKeyHash>> local(
        partition_slots(half_space(kernel), opts.partitions));
    for_each_half(kernel, opts.partitions, [&](std::uint64_t c, std::size_t part) {
      auto [it, fresh] = local[part].try_emplace(kernel.key(c), Class{c, 0});
      if (!fresh && !kernel.key_is_exact() && !same_correlation(kernel, it->second.witness, c))
        throw Error("correlation fingerprint collision on " + grp.to_string());
      it->second.size += 2;
    });
    std::unordered_map<CorrKey, Class, CorrKeyHash> merged;
    for (const auto& part : local)
      for (const auto& [k, cls] : part) {
        auto [it, fresh] = merged.try_emplace(k, cls);
        if (!fresh) it->second.size += cls.size;
      }
    std::vector<std::pair<CorrKey, Class>> sorted(merged.begin(), merged.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [k, cls] : sorted) classes.push_back(cls);
  }

  ProbeResult result;
  result.trials = trials;
  const CorrKey own = kernel.key(sigma.code());
  for (const Class& cls : classes)
    if (kernel.key(cls.witness) == own) result.d_stab = cls.size;

  SeededRng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Interaction j = Interaction::zero(grp);
    for (Rational& v : j.values) v = Rational(rng.uniform(-1000000, 1000000));
    const ScaledEnergy energy_of = scale_interaction(kernel, j);
    const __int128 target = energy_of(kernel, sigma.code());
    std::uint64_t degeneracy = 0;
    for (const Class& cls : classes)
      if (energy_of(kernel, cls.witness) == target) degeneracy += cls.size;
    if (degeneracy == result.d_stab) ++result.equal;
    if (degeneracy < result.d_stab) ++result.violations;
  }
  return result;
}

}  // namespace stabdeg
