#include "stabdeg/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "stabdeg/blocks.hpp"
#include "stabdeg/constructions.hpp"
#include "stabdeg/correlation.hpp"
#include "stabdeg/substitution.hpp"
#include "stabdeg/symmetry.hpp"

namespace stabdeg {

namespace {

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::string show(bool b) { return b ? "true" : "false"; }

template <class T>
std::string show(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

class Catalog {
 public:
  template <class E, class A>
  void check(std::string id, std::string description, const E& expected, const A& actual) {
    const std::string e = show(expected);
    const std::string a = show(actual);
    items_.push_back(CatalogItem{std::move(id), std::move(description), e, a, e == a});
  }

  std::vector<CatalogItem> take() { return std::move(items_); }

 private:
  std::vector<CatalogItem> items_;
};

std::vector<std::int64_t> constant_off_zero(std::int64_t n, std::int64_t off) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(n), off);
  v[0] = n;
  return v;
}

std::vector<std::int64_t> normalized(std::vector<std::int64_t> m) { return dihedral_normal_form(BlockProfile{m}).m; }

}  // namespace

std::vector<CatalogItem> run_reference_catalog(const EnumerationOptions& opts, bool tamper) {
  Catalog c;

  {
    const GroupSpec z4 = GroupSpec::cyclic(4);
    const SpinConfig alt = SpinConfig::parse(z4, "+-+-");
    c.check("Z4.correlate", "A of +-+- on Z4", std::vector<std::int64_t>{4, -4, 4, -4}, correlate(alt).values);
    const Interaction j = Interaction::delta(z4, 1);
    c.check("Z4.jdeg.top", "j = delta_1, all spins up: 2 C(4,4)", 2, j_degeneracy(SpinConfig(z4), j, opts));
    c.check("Z4.jdeg.zero", "j = delta_1, +-++ at h = 0: 2 C(4,2)", 12,
            j_degeneracy(SpinConfig::parse(z4, "+-++"), j, opts));
    c.check("Z5.constant", "all spins up has d_sym = d_stab = 2", std::vector<std::uint64_t>{2, 2},
            std::vector<std::uint64_t>{d_sym(SpinConfig(GroupSpec::cyclic(5))),
                                       d_stab(SpinConfig(GroupSpec::cyclic(5)), opts)});
  }

  {
    const GroupSpec z7 = GroupSpec::cyclic(7);
    const SpinConfig listed = SpinConfig::parse(z7, "++-+--+");
    const SpinConfig leg = legendre_config(7, 1);
    c.check("N7.correlate", "A of (1,1,-1,1,-1,-1,1) is -1 off zero", show(constant_off_zero(7, -1)),
            show(correlate(listed).values));
    c.check("N7.legendre", "Legendre configuration with sigma_0 = +1 is a translate of the listing", true,
            is_translate(leg, listed));
    c.check("N7.legendre.A", "Legendre correlation is -1 off zero", show(constant_off_zero(7, -1)),
            show(correlate_fast(leg).values));
    c.check("N7.d_sym", "d_sym = 4N", 28, d_sym(leg));
    c.check("N7.d_stab", "d_stab = 4N", 28, d_stab(leg, opts));
    const auto rows = survey(z7, Rational(1), opts);
    const std::string rep = orbit(leg).representative.to_string();
    const bool row = std::any_of(rows.begin(), rows.end(), [&](const SurveyRow& r) {
      return r.representative == rep && r.d_sym == 28 && r.d_stab == 28;
    });
    c.check("N7.survey", "survey row for the Legendre orbit with d_sym = d_stab = 28", true, row);
    c.check("N5.legendre", "Legendre correlation for N = 5", std::vector<std::int64_t>{5, 1, -3, -3, 1},
            correlate(legendre_config(5, 1)).values);
  }

  {
    std::size_t exceptional = 0;
    for (std::int64_t n = 2; n <= 11; ++n)
      exceptional += survey(GroupSpec::cyclic(n), Rational(10001, 10000), opts).size();
    c.check("N2-11.survey", "no orbit with d_stab > d_sym for N <= 11", 0, exceptional);
    const auto rows = survey(GroupSpec::cyclic(12), Rational(2), opts);
    const bool found = std::any_of(rows.begin(), rows.end(),
                                   [](const SurveyRow& r) { return r.d_stab == 96 && r.d_sym == 48; });
    c.check("N12.survey", "an orbit with d_stab = 2 d_sym = 8N = 96", true, found);
  }

  {
    const GroupSpec z13 = GroupSpec::cyclic(13);
    const SpinConfig sigma = SpinConfig::parse(z13, "++-+-----+---");
    c.check("N13.correlate", "A is 1 off zero", show(constant_off_zero(13, 1)), show(correlate(sigma).values));
    c.check("N13.d_sym", "d_sym = 4N", 52, d_sym(sigma));
    c.check("N13.d_stab", "d_stab = 8N", tamper ? 105 : 104, d_stab(sigma, opts));
    c.check("N13.psi3", "Psi_3 sigma is a translate of sigma", true,
            is_translate(act_psi_config(Automorphism::unit(z13, 3), sigma), sigma));
    c.check("N13.psi9", "Psi_9 sigma is a translate of sigma", true,
            is_translate(act_psi_config(Automorphism::unit(z13, 9), sigma), sigma));
    const SpinConfig psi2 = act_psi_config(Automorphism::unit(z13, 2), sigma);
    c.check("N13.psi2.outside", "Psi_2 sigma is not in the Phi-orbit of sigma", false, same_phi_orbit(psi2, sigma));
    c.check("N13.psi2.listing", "listed Psi(2, sigma) lies in the Phi-orbit of Psi_2 sigma", true,
            same_phi_orbit(psi2, SpinConfig::parse(z13, "++--+-+------")));
    c.check("N13.joint", "joint orbit splits into 2 Phi-orbits", 2, joint_orbit(sigma).size());
    const SingerResult singer = singer_difference_set(3, 1);
    c.check("N13.singer", "Singer set for q = 3 gives the spin flip of sigma", true,
            same_phi_orbit(config_from_subset(13, singer.set.members), sigma));
    std::vector<std::int64_t> quartic{0};
    for (std::int64_t k = 1; k < 13; ++k) quartic.push_back(k * k * k * k % 13);
    std::sort(quartic.begin(), quartic.end());
    quartic.erase(std::unique(quartic.begin(), quartic.end()), quartic.end());
    c.check("N13.quartic", "down spins of -sigma are 0 and the fourth powers mod 13", show(quartic),
            show(singer.set.members));
    c.check("N13.blocks", "block multiset 1^3 2 3 5", std::vector<std::int64_t>{1, 1, 1, 2, 3, 5},
            block_multiset(blocks_of(sigma)));
    c.check("N13.laplacian0", "Laplacian at 0 is -2k = -6", -6, laplacian(correlate(sigma))[0]);
    const std::int64_t bound = 2 * 13 * euler_phi(13) / 3;
    c.check("N13.bound", "2 N phi(N) / (3n) = 104 is attained", show(std::vector<std::uint64_t>{104, 104}),
            show(std::vector<std::uint64_t>{static_cast<std::uint64_t>(bound), d_stab(sigma, opts)}));
    const auto classes = reconstruct_from_delta(delta_from_profile(blocks_of(sigma)), 13);
    const bool both = std::find(classes.begin(), classes.end(), BlockProfile{normalized({2, 1, 1, 5, 1, 3})}) !=
                          classes.end() &&
                      std::find(classes.begin(), classes.end(), BlockProfile{normalized({2, 2, 1, 1, 1, 6})}) !=
                          classes.end();
    c.check("N13.reconstruct", "Laplacian admits the profiles (2,1,1,5,1,3) and (2,2,1,1,1,6)", true,
            both && classes.size() >= 2);
  }

  {
    const GroupSpec z14 = GroupSpec::cyclic(14);
    const SpinConfig sigma = SpinConfig::parse(z14, "--+++++-++-+-+");
    const SpinConfig tau = SpinConfig::parse(z14, "--+-++++-+++-+");
    c.check("N14.same_A", "A(sigma) = A(tau)", true, correlate(sigma) == correlate(tau));
    c.check("N14.d_stab", "d_stab = 2 d_sym = 8N", std::vector<std::uint64_t>{112, 56},
            std::vector<std::uint64_t>{d_stab(sigma, opts), d_sym(sigma)});
    c.check("N14.joint", "tau is outside the joint orbit of sigma", false, in_joint_orbit(sigma, tau));
  }

  {
    const GroupSpec z16 = GroupSpec::cyclic(16);
    const SpinConfig sigma = SpinConfig::parse(z16, "--+-++++-+-+--++");
    c.check("N16.d_stab", "d_stab = 3 |S| = 12N", 192, d_stab(sigma, opts));
    c.check("N16.aut", "Aut(Z16) maps A(sigma) to four correlations", 4, automorphism_correlations(sigma).size());
  }

  {
    const SubstitutionWord w = SubstitutionWord::parse("UVUUVVV", "++-", "-+-");
    const SpinConfig sigma = flatten(w);
    const SpinConfig tau = flatten(reverse_word(w));
    c.check("N21.sigma", "flattened word", std::string("++--+-++-++--+--+--+-"), sigma.to_string());
    c.check("N21.tau", "flattened reversed word", std::string("-+--+--+-++-++--+-++-"), tau.to_string());
    c.check("N21.reverse", "reversed letters", std::string("VVVUUVU"), reverse_word(w).letters);
    std::vector<std::int64_t> expected(21);
    for (std::size_t f = 0; f < 21; ++f) expected[f] = f == 0 ? 21 : (f % 3 == 0 ? 13 : -7);
    c.check("N21.correlate", "A_0 = 21, A_f = 13 for 3 | f, -7 otherwise", show(expected),
            show(correlate(sigma).values));
    const ReversalReport r = verify_reversal_identity(w);
    c.check("N21.identity", "A(tau) = A(sigma)", true, r.equal);
    c.check("N21.outside", "tau is not in the Phi-orbit of sigma", false, r.same_phi_orbit);
    c.check("N21.psi10", "tau is a translate of Psi_10 sigma", true,
            is_translate(act_psi_config(Automorphism::unit(sigma.group(), 10), sigma), tau));
    c.check("N21.blocks", "both block multisets are 1^7 2^7",
            show(std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2}),
            show(block_multiset(blocks_of(sigma))) == show(block_multiset(blocks_of(tau)))
                ? show(block_multiset(blocks_of(sigma)))
                : std::string("differ"));
    c.check("N21.d_stab", "d_stab exceeds d_sym", true, d_stab(sigma, opts) > d_sym(sigma));
  }

  {
    const SingerResult q2 = singer_difference_set(2, 1);
    c.check("PDS.q2", "Singer set for q = 2", std::vector<std::int64_t>{0, 1, 3}, q2.set.members);
    c.check("PDS.q2.A", "A is q^2 - 3q + 1 = -1 off zero", show(constant_off_zero(7, -1)),
            show(correlate(config_from_subset(7, q2.set.members)).values));
    for (std::int64_t q : {2, 3, 4})
      c.check("PDS.reduced.q" + std::to_string(q), "reduced difference sets = phi(N)/(3n)",
              expected_reduced_count(q), reduced_difference_sets(q).size());
  }

  for (std::int64_t n : {7, 13}) {
    const RigidityReport rep = verify_four_block_rigidity(n, opts);
    c.check("N" + std::to_string(n) + ".four_block", "configurations with <= 4 blocks have d_stab = d_sym", true,
            rep.ok() && rep.checked > 0);
  }

  return c.take();
}

}  // namespace stabdeg
