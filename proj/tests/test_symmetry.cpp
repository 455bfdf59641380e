#include <doctest.h>

#include "oracle.hpp"
#include "stabdeg/bit_kernel.hpp"
#include "stabdeg/errors.hpp"
#include "stabdeg/symmetry.hpp"

using namespace stabdeg;

namespace {

const char* const kGroups[] = {"Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12",
                               "Z2xZ2", "Z2xZ3", "Z2xZ4", "Z4xZ2", "Z3xZ3", "Z2xZ2xZ2", "Z2xZ6", "Z3xZ4",
                               "Z2xZ2xZ3"};

}  // namespace

TEST_SUITE("symmetry") {
  TEST_CASE("action examples") {
    const GroupSpec z3 = GroupSpec::cyclic(3);
    CHECK(act_phi({1, 1, 1}, SpinConfig::parse(z3, "+--")).to_string() == "--+");
    const GroupSpec z4 = GroupSpec::cyclic(4);
    CHECK(act_phi({1, 0, -1}, SpinConfig::parse(z4, "+-++")).to_string() == "+++-");
    const SpinConfig s = SpinConfig::parse(GroupSpec::cyclic(6), "+--+-+");
    CHECK(act_phi({-1, 0, 1}, s) == -s);
    CHECK_THROWS_AS(act_phi({1, 6, 1}, s), GroupMismatch);
  }

  TEST_CASE("group laws of the action") {
    for (const char* spec : {"Z5", "Z6", "Z2xZ4", "Z3xZ3"}) {
      const GroupSpec g = parse_group_spec(spec);
      const auto elems = symmetry_group(g);
      CHECK(elems.size() == 4 * g.order());
      const SpinConfig s = SpinConfig::from_code(g, 0b1011 % (std::uint64_t{1} << g.order()));
      for (const SymElement& a : elems) {
        CHECK(act_phi(compose(g, a, inverse(g, a)), s) == s);
        for (const SymElement& b : elems) REQUIRE(act_phi(compose(g, a, b), s) == act_phi(a, act_phi(b, s)));
      }
    }
  }

  TEST_CASE("kernel agrees with the generic action") {
    for (const char* spec : kGroups) {
      const GroupSpec g = parse_group_spec(spec);
      const BitKernel k(g);
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.order()); b += 3) {
        const SpinConfig s = SpinConfig::from_code(g, b);
        for (const SymElement& e : symmetry_group(g))
          REQUIRE(SpinConfig::from_code(g, k.act(b, e.s, e.t, e.r)) == act_phi(e, s));
        REQUIRE(d_sym(s) == oracle::orbit_size(g, oracle::signs(s)));
        REQUIRE(orbit_members(s).size() == d_sym(s));
        REQUIRE(orbit(s).representative == orbit_members(s).front());
        REQUIRE(k.is_orbit_min(b) == (orbit(s).representative == s));
      }
    }
  }

  TEST_CASE("orbit sizes") {
    for (const char* spec : {"Z5", "Z8", "Z2xZ3"}) CHECK(d_sym(SpinConfig(parse_group_spec(spec))) == 2);
    CHECK(d_sym(SpinConfig::parse(GroupSpec::cyclic(7), "++-+--+")) == 28);
    CHECK(d_sym(SpinConfig::parse(GroupSpec::cyclic(13), "++-+-----+---")) == 52);
    CHECK(d_sym(SpinConfig::parse(GroupSpec::cyclic(5), "+----")) == 10);
    for (const char* spec : kGroups) {
      const GroupSpec g = parse_group_spec(spec);
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.order()); ++b) {
        const SpinConfig s = SpinConfig::from_code(g, b);
        const std::size_t ds = d_sym(s);
        REQUIRE(ds * stabilizer(s).size() == 4 * g.order());
        REQUIRE(ds <= 4 * g.order());
        if (g.exponent() == 2) REQUIRE(ds <= 2 * g.order());
      }
    }
    // long configurations take the generic path
    const GroupSpec z70 = GroupSpec::cyclic(70);
    std::string t(70, '+');
    t[3] = t[10] = t[11] = '-';
    CHECK(d_sym(SpinConfig::parse(z70, t)) == 280);
  }

  TEST_CASE("invariance and equivariance of the correlation, exhaustive") {
    for (const char* spec : kGroups) {
      const GroupSpec g = parse_group_spec(spec);
      const auto elems = symmetry_group(g);
      const bool cyclic = g.is_cyclic();
      const auto auts = cyclic ? automorphisms(g) : std::vector<Automorphism>{};
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.order()); ++b) {
        const SpinConfig s = SpinConfig::from_code(g, b);
        const CorrelationVector a = correlate_fast(s);
        for (const SymElement& e : elems) REQUIRE(correlate_fast(act_phi(e, s)) == a);
        for (const Automorphism& phi : auts) {
          REQUIRE(correlate_fast(act_psi_config(phi, s)) == act_psi_corr(phi, a));
          // Psi_phi Phi_(s,t,r) = Phi_(s,phi(t),r) Psi_phi
          for (const SymElement& e : elems)
            REQUIRE(act_psi_config(phi, act_phi(e, s)) ==
                    act_phi(SymElement{e.s, phi(e.t), e.r}, act_psi_config(phi, s)));
        }
      }
    }
  }

  TEST_CASE("Psi examples on Z13") {
    const GroupSpec z13 = GroupSpec::cyclic(13);
    const SpinConfig s = SpinConfig::parse(z13, "++-+-----+---");
    CHECK(act_psi_config(Automorphism::unit(z13, 1), s) == s);
    CHECK(is_translate(act_psi_config(Automorphism::unit(z13, 3), s), s));
    CHECK(is_translate(act_psi_config(Automorphism::unit(z13, 9), s), s));
    const SpinConfig p2 = act_psi_config(Automorphism::unit(z13, 2), s);
    CHECK_FALSE(same_phi_orbit(p2, s));
    CHECK(same_phi_orbit(p2, SpinConfig::parse(z13, "++--+-+------")));
    CHECK(joint_orbit(s).size() == 2);
    CHECK(joint_orbit(SpinConfig(z13)).size() == 1);
    CHECK(in_joint_orbit(s, p2));
  }

  TEST_CASE("Aut images of correlations") {
    const SpinConfig s16 = SpinConfig::parse(GroupSpec::cyclic(16), "--+-++++-+-+--++");
    CHECK(automorphism_correlations(s16).size() == 4);
    const SpinConfig s14 = SpinConfig::parse(GroupSpec::cyclic(14), "--+++++-++-+-+");
    const SpinConfig t14 = SpinConfig::parse(GroupSpec::cyclic(14), "--+-++++-+++-+");
    CHECK(correlate(s14) == correlate(t14));
    CHECK_FALSE(in_joint_orbit(s14, t14));
    CHECK_THROWS_AS(joint_orbit(SpinConfig(parse_group_spec("Z2xZ2"))), DomainError);
  }
}
