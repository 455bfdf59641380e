#include "stabdeg/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "stabdeg/errors.hpp"

namespace stabdeg {

namespace {

using Poly = std::vector<std::int64_t>;  // low degree first

std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, std::int64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::int64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - lead * b[i], p);
    trim(a);
  }
  return a;
}

// Monic polynomial of the given degree whose lower coefficients are the base-p
// digits of `code`, constant term least significant.
Poly monic_from_code(std::int64_t code, int degree, std::int64_t p) {
  Poly f(degree + 1, 0);
  for (int i = 0; i < degree; ++i, code /= p) f[i] = code % p;
  f[degree] = 1;
  return f;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool irreducible(const Poly& f, std::int64_t p) {
  const int degree = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= degree; ++d)
    for (std::int64_t c = 0; c < ipow(p, d); ++c)
      if (poly_mod(f, monic_from_code(c, d, p), p).empty()) return false;
  return true;
}

using Point = std::array<int, 3>;

Point normalize(const GaloisField& k, Point v) {
  for (int x : v)
    if (x != 0) {
      const int s = k.inv(x);
      for (int& y : v) y = k.mul(y, s);
      return v;
    }
  return v;
}

int det3(const GaloisField& k, const Point& a, const Point& b, const Point& c) {
  auto minor = [&](int x0, int x1, int y0, int y1) { return k.sub(k.mul(x0, y1), k.mul(x1, y0)); };
  int d = k.mul(a[0], minor(b[1], b[2], c[1], c[2]));
  d = k.sub(d, k.mul(a[1], minor(b[0], b[2], c[0], c[2])));
  return k.add(d, k.mul(a[2], minor(b[0], b[1], c[0], c[1])));
}

// Orbit of (0, 0, 1) under the companion matrix, up to the first repeat.
std::vector<Point> companion_orbit(const GaloisField& k, const std::array<int, 3>& c, std::size_t limit) {
  std::vector<Point> pts;
  Point v{0, 0, 1};
  const Point start = v;
  for (std::size_t i = 0; i < limit; ++i) {
    pts.push_back(v);
    const Point w{k.add(k.mul(c[0], v[0]), v[1]), k.add(k.mul(c[1], v[0]), v[2]), k.mul(c[2], v[0])};
    v = normalize(k, w);
    if (v == start) break;
  }
  return pts;
}

bool cubic_has_root(const GaloisField& k, const std::array<int, 3>& c) {
  for (int x = 0; x < k.order(); ++x) {
    const int x2 = k.mul(x, x);
    int v = k.mul(x2, x);
    v = k.sub(v, k.mul(c[0], x2));
    v = k.sub(v, k.mul(c[1], x));
    v = k.sub(v, c[2]);
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int legendre_symbol(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0) return 0;
  std::int64_t r = 1, b = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  if (n > 1) result -= result / n;
  return result;
}

SpinConfig legendre_config(std::int64_t n, int sign) {
  if (n < 3 || !is_prime(n)) throw DomainError(std::to_string(n) + " is not an odd prime");
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  SpinConfig sigma(GroupSpec::cyclic(n));
  sigma.set(0, sign);
  for (std::int64_t k = 1; k < n; ++k) sigma.set(static_cast<std::size_t>(k), legendre_symbol(k, n));
  return sigma;
}

std::int64_t FieldSpec::order() const { return ipow(p, degree); }

FieldSpec default_field(std::int64_t p, int degree) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (degree < 1) throw DomainError("field degree must be positive");
  const std::int64_t count = ipow(p, degree);
  if (count > 4096) throw BoundExceeded("field order " + std::to_string(count) + " too large");
  // Code order with the X^{n-1} digit most significant is the required lexicographic order.
  for (std::int64_t c = 0; c < count; ++c) {
    Poly f = monic_from_code(c, degree, p);
    if (irreducible(f, p)) return FieldSpec{p, degree, std::move(f)};
  }
  throw DomainError("no irreducible polynomial found");
}

GaloisField::GaloisField(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.order()) {
  const std::int64_t p = spec_.p;
  const int n = spec_.degree;
  if (!is_prime(p) || static_cast<int>(spec_.modulus.size()) != n + 1 || spec_.modulus.back() != 1)
    throw DomainError("field modulus must be monic of the stated degree over a prime field");
  if (!irreducible(spec_.modulus, p)) throw DomainError("field modulus is not irreducible");
  if (q_ > 4096) throw BoundExceeded("field order " + std::to_string(q_) + " too large");

  auto to_poly = [&](std::int64_t code) {
    Poly a(n, 0);
    for (int i = 0; i < n; ++i, code /= p) a[i] = code % p;
    return a;
  };
  auto to_code = [&](const Poly& a) {
    std::int64_t code = 0;
    for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return static_cast<int>(code);
  };

  const auto q = static_cast<std::size_t>(q_);
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  for (std::int64_t a = 0; a < q_; ++a) {
    const Poly pa = to_poly(a);
    Poly na(n);
    for (int i = 0; i < n; ++i) na[i] = mod(-pa[i], p);
    neg_[a] = to_code(na);
    for (std::int64_t b = 0; b < q_; ++b) {
      const Poly pb = to_poly(b);
      Poly sum(n);
      for (int i = 0; i < n; ++i) sum[i] = mod(pa[i] + pb[i], p);
      add_[idx(int(a), int(b))] = to_code(sum);
      Poly prod(2 * n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prod[i + j] = mod(prod[i + j] + pa[i] * pb[j], p);
      mul_[idx(int(a), int(b))] = to_code(poly_mod(prod, spec_.modulus, p));
    }
  }
}

int GaloisField::inv(int a) const {
  if (a == 0) throw DomainError("zero has no inverse");
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw DomainError("element has no inverse");
}

bool is_perfect(std::int64_t n, const std::vector<std::int64_t>& members) {
  if (n < 2) return false;
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (std::int64_t a : members)
    for (std::int64_t b : members)
      if (a != b) ++hits[static_cast<std::size_t>(mod(b - a, n))];
  for (std::int64_t h = 1; h < n; ++h)
    if (hits[h] != 1) return false;
  return true;
}

SingerResult singer_difference_set(std::int64_t p, int degree, std::optional<std::array<int, 3>> cubic) {
  const GaloisField k(default_field(p, degree));
  const std::int64_t q = k.order();
  const std::int64_t n = q * q + q + 1;

  auto build = [&](const std::array<int, 3>& c) -> std::optional<SingerResult> {
    const std::vector<Point> pts = companion_orbit(k, c, static_cast<std::size_t>(n) + 1);
    if (static_cast<std::int64_t>(pts.size()) != n) return std::nullopt;
    SingerResult out;
    out.cubic = c;
    out.field = k.spec();
    out.set.n = n;
    out.set.q = q;
    for (std::int64_t i = 0; i < n; ++i)
      if (det3(k, pts[0], pts[1], pts[static_cast<std::size_t>(i)]) == 0) out.set.members.push_back(i);
    return out;
  };

  std::optional<SingerResult> found;
  if (cubic) {
    for (int x : *cubic)
      if (x < 0 || x >= q) throw DomainError("cubic coefficient outside the field");
    if ((*cubic)[2] == 0 || cubic_has_root(k, *cubic)) throw DomainError("cubic is not irreducible");
    found = build(*cubic);
    if (!found) throw DomainError("cubic is not primitive: the collineation has order below " + std::to_string(n));
  } else {
    for (int c2 = 0; c2 < q && !found; ++c2)
      for (int c1 = 0; c1 < q && !found; ++c1)
        for (int c0 = 1; c0 < q && !found; ++c0) found = build({c2, c1, c0});
    if (!found) throw DomainError("no primitive cubic found");
  }
  if (static_cast<std::int64_t>(found->set.members.size()) != q + 1 || !is_perfect(n, found->set.members))
    throw Error("Singer construction did not produce a perfect difference set");
  return *found;
}

SpinConfig config_from_subset(std::int64_t n, const std::vector<std::int64_t>& subset) {
  SpinConfig sigma(GroupSpec::cyclic(n));
  for (std::int64_t d : subset) {
    if (d < 0 || d >= n) throw DomainError("subset element " + std::to_string(d) + " outside Z" + std::to_string(n));
    sigma.set(static_cast<std::size_t>(d), -1);
  }
  return sigma;
}

std::optional<std::pair<std::int64_t, int>> prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  for (std::int64_t p = 2; p <= q; ++p)
    if (q % p == 0) {
      int n = 0;
      while (q % p == 0) q /= p, ++n;
      if (q != 1) return std::nullopt;
      return std::make_pair(p, n);
    }
  return std::nullopt;
}

std::vector<DifferenceSet> reduced_difference_sets(std::int64_t q) {
  if (q < 2) throw DomainError("q must be at least 2");
  if (q > 8) throw BoundExceeded("exhaustive difference set search limited to q <= 8");
  const std::int64_t n = q * q + q + 1;
  const std::size_t size = static_cast<std::size_t>(q + 1);

  std::vector<DifferenceSet> out;
  std::vector<std::int64_t> members{0, 1};
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[1] = used[static_cast<std::size_t>(n - 1)] = 1;

  // Members ascend; each candidate must create only unused differences.
  auto extend = [&](auto&& self, std::int64_t next) -> void {
    if (members.size() == size) {
      out.push_back(DifferenceSet{n, q, members});
      return;
    }
    for (std::int64_t c = next; c < n; ++c) {
      std::vector<std::size_t> added;
      bool ok = true;
      for (std::int64_t m : members) {
        const auto d1 = static_cast<std::size_t>(mod(c - m, n));
        const auto d2 = static_cast<std::size_t>(mod(m - c, n));
        if (used[d1] || used[d2] || d1 == d2) {
          ok = false;
          break;
        }
        used[d1] = used[d2] = 1;
        added.push_back(d1);
        added.push_back(d2);
      }
      if (ok) {
        members.push_back(c);
        self(self, c + 1);
        members.pop_back();
      }
      for (std::size_t d : added) used[d] = 0;
    }
  };
  extend(extend, 2);

  for (const DifferenceSet& d : out)
    if (!is_perfect(n, d.members)) throw Error("difference set search produced an imperfect set");
  return out;
}

std::int64_t expected_reduced_count(std::int64_t q) {
  const auto pp = prime_power(q);
  if (!pp) throw DomainError(std::to_string(q) + " is not a prime power");
  return euler_phi(q * q + q + 1) / (3 * pp->second);
}

SpinConfig product_config(const SpinConfig& sigma1, const SpinConfig& sigma2) {
  std::vector<std::int64_t> factors = sigma1.group().factors();
  const auto& more = sigma2.group().factors();
  factors.insert(factors.end(), more.begin(), more.end());
  SpinConfig out{GroupSpec(factors)};
  const std::size_t n2 = sigma2.size();
  for (std::size_t i = 0; i < sigma1.size(); ++i)
    for (std::size_t j = 0; j < n2; ++j) out.set(i * n2 + j, sigma1[i] * sigma2[j]);
  return out;
}

SpinConfig periodic_lift(const SpinConfig& tau, const QuotientMap& pi) {
  require_same_group(tau.group(), pi.target);
  SpinConfig sigma(pi.source);
  for (std::size_t f = 0; f < sigma.size(); ++f) sigma.set(f, tau[pi(f)]);
  return sigma;
}

}  // namespace stabdeg
