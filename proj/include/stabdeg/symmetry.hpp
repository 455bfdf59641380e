#pragma once

#include <cstddef>
#include <vector>

#include "stabdeg/correlation.hpp"
#include "stabdeg/group.hpp"
#include "stabdeg/spin.hpp"

namespace stabdeg {

/// (s, t, r) in S_F = {+-1} x (F x| {+-1}): spin flip, translation, reflection.
struct SymElement {
  int s = 1;
  std::size_t t = 0;
  int r = 1;

  friend bool operator==(const SymElement&, const SymElement&) = default;
};

/// The element acting as g after h: act(compose(g, h)) = act(g) o act(h).
SymElement compose(const GroupSpec& group, const SymElement& g, const SymElement& h);
SymElement inverse(const GroupSpec& group, const SymElement& g);
/// All 4|F| elements, ordered by (s, t, r).
std::vector<SymElement> symmetry_group(const GroupSpec& group);

/// (Phi_{(s,t,r)} sigma)_f = s sigma_{r f + t}.
SpinConfig act_phi(const SymElement& g, const SpinConfig& sigma);

/// A Phi-orbit, represented by its least member in text order.
struct Orbit {
  SpinConfig representative;
  std::size_t size = 0;

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

std::vector<SymElement> stabilizer(const SpinConfig& sigma);
/// D_sym(sigma) = 4|F| / |S_F(sigma)|.
std::size_t d_sym(const SpinConfig& sigma);
Orbit orbit(const SpinConfig& sigma);
/// Distinct members of the Phi-orbit, sorted in text order.
std::vector<SpinConfig> orbit_members(const SpinConfig& sigma);
bool same_phi_orbit(const SpinConfig& a, const SpinConfig& b);
bool is_translate(const SpinConfig& a, const SpinConfig& b);

/// Psi^(G)_phi(sigma)_f = sigma_{phi^-1(f)}.
SpinConfig act_psi_config(const Automorphism& phi, const SpinConfig& sigma);
/// Psi^(ev)_phi(h)_f = h_{phi^-1(f)}.
CorrelationVector act_psi_corr(const Automorphism& phi, const CorrelationVector& corr);

/// Phi-orbits reached from sigma under every Psi^(G)_phi, phi in Aut(F); sorted
/// by representative. Cyclic F only.
std::vector<Orbit> joint_orbit(const SpinConfig& sigma);
bool in_joint_orbit(const SpinConfig& sigma, const SpinConfig& tau);

/// Distinct vectors Psi^(ev)_phi(A(sigma)) over Aut(F), sorted. Cyclic F only.
std::vector<CorrelationVector> automorphism_correlations(const SpinConfig& sigma);

}  // namespace stabdeg
