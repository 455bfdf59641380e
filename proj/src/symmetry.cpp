#include "stabdeg/symmetry.hpp"

#include <algorithm>

#include "stabdeg/bit_kernel.hpp"
#include "stabdeg/errors.hpp"

namespace stabdeg {

SymElement compose(const GroupSpec& group, const SymElement& g, const SymElement& h) {
  // s1 s2 sigma_{r2 (r1 f + t1) + t2}
  const std::size_t t1 = h.r > 0 ? g.t : group.neg(g.t);
  return SymElement{g.s * h.s, group.add(t1, h.t), g.r * h.r};
}

SymElement inverse(const GroupSpec& group, const SymElement& g) {
  const std::size_t t = g.r > 0 ? group.neg(g.t) : g.t;
  return SymElement{g.s, t, g.r};
}

std::vector<SymElement> symmetry_group(const GroupSpec& group) {
  std::vector<SymElement> out;
  out.reserve(4 * group.order());
  for (int s : {1, -1})
    for (std::size_t t = 0; t < group.order(); ++t)
      for (int r : {1, -1}) out.push_back(SymElement{s, t, r});
  return out;
}

SpinConfig act_phi(const SymElement& g, const SpinConfig& sigma) {
  const GroupSpec& grp = sigma.group();
  if (g.t >= grp.order()) throw GroupMismatch("translation does not belong to " + grp.to_string());
  SpinConfig out(grp);
  for (std::size_t f = 0; f < grp.order(); ++f) {
    const std::size_t src = grp.add(g.r > 0 ? f : grp.neg(f), g.t);
    out.set(f, g.s * sigma[src]);
  }
  return out;
}

std::vector<SymElement> stabilizer(const SpinConfig& sigma) {
  std::vector<SymElement> out;
  for (const SymElement& g : symmetry_group(sigma.group()))
    if (act_phi(g, sigma) == sigma) out.push_back(g);
  return out;
}

std::size_t d_sym(const SpinConfig& sigma) {
  const std::size_t n = sigma.size();
  if (n <= 64) return BitKernel(sigma.group()).orbit_size(sigma.code());
  return 4 * n / stabilizer(sigma).size();
}

std::vector<SpinConfig> orbit_members(const SpinConfig& sigma) {
  std::vector<SpinConfig> out;
  for (const SymElement& g : symmetry_group(sigma.group())) out.push_back(act_phi(g, sigma));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Orbit orbit(const SpinConfig& sigma) {
  if (sigma.size() <= 64) {
    const BitKernel kernel(sigma.group());
    const std::uint64_t code = sigma.code();
    return Orbit{SpinConfig::from_code(sigma.group(), kernel.orbit_min(code)), kernel.orbit_size(code)};
  }
  std::vector<SpinConfig> members = orbit_members(sigma);
  return Orbit{members.front(), members.size()};
}

bool same_phi_orbit(const SpinConfig& a, const SpinConfig& b) {
  require_same_group(a.group(), b.group());
  return orbit(a).representative == orbit(b).representative;
}

bool is_translate(const SpinConfig& a, const SpinConfig& b) {
  require_same_group(a.group(), b.group());
  for (std::size_t t = 0; t < a.size(); ++t)
    if (act_phi(SymElement{1, t, 1}, a) == b) return true;
  return false;
}

SpinConfig act_psi_config(const Automorphism& phi, const SpinConfig& sigma) {
  require_same_group(phi.group(), sigma.group());
  const Automorphism inv = phi.inverse();
  SpinConfig out(sigma.group());
  for (std::size_t f = 0; f < sigma.size(); ++f) out.set(f, sigma[inv(f)]);
  return out;
}

CorrelationVector act_psi_corr(const Automorphism& phi, const CorrelationVector& corr) {
  require_same_group(phi.group(), corr.group);
  const Automorphism inv = phi.inverse();
  CorrelationVector out{corr.group, std::vector<std::int64_t>(corr.values.size())};
  for (std::size_t f = 0; f < corr.values.size(); ++f) out.values[f] = corr.values[inv(f)];
  return out;
}

std::vector<Orbit> joint_orbit(const SpinConfig& sigma) {
  std::vector<Orbit> out;
  for (const Automorphism& phi : automorphisms(sigma.group())) {
    Orbit o = orbit(act_psi_config(phi, sigma));
    if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(),
            [](const Orbit& a, const Orbit& b) { return a.representative < b.representative; });
  return out;
}

bool in_joint_orbit(const SpinConfig& sigma, const SpinConfig& tau) {
  require_same_group(sigma.group(), tau.group());
  const SpinConfig rep = orbit(tau).representative;
  for (const Orbit& o : joint_orbit(sigma))
    if (o.representative == rep) return true;
  return false;
}

std::vector<CorrelationVector> automorphism_correlations(const SpinConfig& sigma) {
  const CorrelationVector a = correlate_fast(sigma);
  std::vector<CorrelationVector> out;
  for (const Automorphism& phi : automorphisms(sigma.group())) {
    CorrelationVector img = act_psi_corr(phi, a);
    if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(std::move(img));
  }
  std::sort(out.begin(), out.end(),
            [](const CorrelationVector& x, const CorrelationVector& y) { return x.values < y.values; });
  return out;
}

}  // namespace stabdeg
