#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stabdeg/blocks.hpp"
#include "stabdeg/catalog.hpp"
#include "stabdeg/constructions.hpp"
#include "stabdeg/correlation.hpp"
#include "stabdeg/degeneracy.hpp"
#include "stabdeg/errors.hpp"
#include "stabdeg/io.hpp"
#include "stabdeg/substitution.hpp"
#include "stabdeg/symmetry.hpp"

using namespace stabdeg;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string group;
  std::string config;
  std::string out;
  std::string min_ratio = "1";
  std::size_t threads = 0;
  std::uint64_t seed = 1;
  std::size_t bound = 28;
  std::int64_t nmin = 2;
  std::int64_t nmax = 0;
  std::int64_t n = 0;
  int sign = 1;
  std::int64_t p = 0;
  int degree = 1;
  std::vector<int> cubic;
  std::int64_t q = 0;
  std::string u, v, word;
  std::string j;
  std::string delta;
  std::size_t trials = 100;
  bool tamper = false;
  bool verify_keys = false;
};

EnumerationOptions enumeration(const Options& o);

// Rejects the whole N range before any enumeration starts.
void check_range(const Options& o) {
  if (o.nmin > o.nmax) throw DomainError("--nmin exceeds --nmax");
  check_enumeration_bound(GroupSpec::cyclic(o.nmax), enumeration(o));
}

EnumerationOptions enumeration(const Options& o) {
  EnumerationOptions e;
  e.bound = o.bound;
  e.partitions = o.threads;
  e.verify_fingerprints = o.verify_keys;
  return e;
}

SpinConfig config_arg(const Options& o) { return SpinConfig::parse(GroupSpec::parse(o.group), o.config); }

// Writes to --out when given, otherwise to standard output.
void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw DomainError("cannot write " + o.out);
  f << text;
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump() + "\n"); }

Interaction interaction_arg(const GroupSpec& group, const std::string& text) {
  Interaction j = Interaction::zero(group);
  std::vector<Rational> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_rational(item));
  if (values.size() != group.order())
    throw ParseError("interaction needs " + std::to_string(group.order()) + " comma-separated values");
  j.values = values;
  return j;
}

int cmd_verify(const Options& o) {
  const auto items = run_reference_catalog(enumeration(o), o.tamper);
  std::ostringstream os;
  std::size_t failed = 0;
  for (const CatalogItem& it : items) {
    os << (it.pass ? "PASS " : "FAIL ") << it.id << "  " << it.description;
    if (!it.pass) os << "  expected " << it.expected << " got " << it.actual;
    os << '\n';
    failed += !it.pass;
  }
  os << items.size() - failed << "/" << items.size() << " reproduced\n";
  emit(o, os.str());
  return failed == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symmetry and stable degeneracies of translation-invariant Ising models"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> run;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write output to this file");
    sub->add_option("--threads", o.threads, "Worker partitions (0 = available cores)");
    sub->add_option("--bound", o.bound, "Largest |F| to enumerate exhaustively")->check(CLI::Range(1, 40));
  };
  auto group_config = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "Group, e.g. Z13 or Z2xZ4")->required();
    sub->add_option("--config", o.config, "Configuration as a +/- string")->required();
    common(sub);
  };

  auto* correlate_cmd = app.add_subcommand("correlate", "Correlation vector A(sigma) as JSON");
  group_config(correlate_cmd);
  correlate_cmd->callback([&] {
    run = [&] {
      const SpinConfig s = config_arg(o);
      Json j = to_json(correlate_fast(s));
      j["magnetization"] = s.magnetization();
      emit_json(o, j);
      return kOk;
    };
  });

  auto* dsym_cmd = app.add_subcommand("dsym", "Symmetry-induced degeneracy");
  group_config(dsym_cmd);
  dsym_cmd->callback([&] {
    run = [&] {
      emit(o, std::to_string(d_sym(config_arg(o))) + "\n");
      return kOk;
    };
  });

  auto* dstab_cmd = app.add_subcommand("dstab", "Stable degeneracy");
  group_config(dstab_cmd);
  dstab_cmd->callback([&] {
    run = [&] {
      emit(o, std::to_string(d_stab(config_arg(o), enumeration(o))) + "\n");
      return kOk;
    };
  });

  auto* fiber_cmd = app.add_subcommand("fiber", "All configurations with the same correlation");
  group_config(fiber_cmd);
  fiber_cmd->callback([&] {
    run = [&] {
      const SpinConfig s = config_arg(o);
      Json configs = Json::array();
      for (const SpinConfig& t : fiber(s, enumeration(o))) configs.push_back(t.to_string());
      emit_json(o, Json{{"group", s.group().to_string()}, {"d_stab", configs.size()}, {"configs", configs}});
      return kOk;
    };
  });

  auto* jdeg_cmd = app.add_subcommand("jdeg", "Degeneracy of the energy level of sigma for an interaction j");
  group_config(jdeg_cmd);
  jdeg_cmd->add_option("--j", o.j, "Couplings j_f, comma-separated exact numbers")->required();
  jdeg_cmd->callback([&] {
    run = [&] {
      const SpinConfig s = config_arg(o);
      emit(o, std::to_string(j_degeneracy(s, interaction_arg(s.group(), o.j), enumeration(o))) + "\n");
      return kOk;
    };
  });

  auto* probe_cmd = app.add_subcommand("jprobe", "Fraction of random integer j with D(sigma, j) = d_stab");
  group_config(probe_cmd);
  probe_cmd->add_option("--trials", o.trials, "Number of sampled interactions");
  probe_cmd->add_option("--seed", o.seed, "Seed of the interaction generator");
  probe_cmd->callback([&] {
    run = [&] {
      const ProbeResult r = generic_j_probe(config_arg(o), o.trials, o.seed, enumeration(o));
      emit_json(o, Json{{"trials", r.trials},
                        {"equal", r.equal},
                        {"violations", r.violations},
                        {"d_stab", r.d_stab},
                        {"fraction", format_rational(r.fraction())}});
      return r.violations == 0 ? kOk : kVerifyFailed;
    };
  });

  auto* survey_cmd = app.add_subcommand("survey", "One CSV row per orbit with d_stab / d_sym >= min ratio");
  survey_cmd->add_option("--group", o.group, "Group")->required();
  survey_cmd->add_option("--min-ratio", o.min_ratio, "Smallest ratio to report (exact)");
  common(survey_cmd);
  survey_cmd->callback([&] {
    run = [&] {
      std::ostringstream os;
      write_survey_csv(os, survey(GroupSpec::parse(o.group), parse_rational(o.min_ratio), enumeration(o)));
      emit(o, os.str());
      return kOk;
    };
  });

  auto* msd_cmd = app.add_subcommand("msd", "Mean stable degeneracy table for Z/N, N = nmin..nmax");
  msd_cmd->add_option("--nmax", o.nmax, "Largest N")->required();
  msd_cmd->add_option("--nmin", o.nmin, "Smallest N")->check(CLI::Range(2, 40));
  common(msd_cmd);
  msd_cmd->callback([&] {
    run = [&] {
      std::vector<MsdRow> rows;
      check_range(o);
      for (std::int64_t n = o.nmin; n <= o.nmax; ++n) rows.push_back(msd(GroupSpec::cyclic(n), enumeration(o)));
      std::ostringstream os;
      write_msd_csv(os, rows);
      emit(o, os.str());
      return kOk;
    };
  });

  auto* legendre_cmd = app.add_subcommand("legendre", "Legendre-symbol configuration for an odd prime");
  legendre_cmd->add_option("--n", o.n, "Odd prime N")->required();
  legendre_cmd->add_option("--sign", o.sign, "Spin at index 0")->check(CLI::IsMember({-1, 1}));
  common(legendre_cmd);
  legendre_cmd->callback([&] {
    run = [&] {
      const SpinConfig s = legendre_config(o.n, o.sign);
      Json j = to_json(correlate_fast(s));
      j["config"] = s.to_string();
      emit_json(o, j);
      return kOk;
    };
  });

  auto* singer_cmd = app.add_subcommand("singer", "Singer perfect difference set for q = p^n");
  singer_cmd->add_option("--p", o.p, "Characteristic")->required();
  singer_cmd->add_option("--n", o.degree, "Extension degree");
  singer_cmd->add_option("--cubic", o.cubic, "Coefficients c2 c1 c0 of X^3 - c2 X^2 - c1 X - c0")->expected(3);
  common(singer_cmd);
  singer_cmd->callback([&] {
    run = [&] {
      std::optional<std::array<int, 3>> cubic;
      if (!o.cubic.empty()) cubic = std::array<int, 3>{o.cubic[0], o.cubic[1], o.cubic[2]};
      const SingerResult r = singer_difference_set(o.p, o.degree, cubic);
      emit_json(o, Json{{"q", r.set.q},
                        {"N", r.set.n},
                        {"members", to_json(r.set)},
                        {"cubic", r.cubic},
                        {"field_modulus", r.field.modulus},
                        {"config", config_from_subset(r.set.n, r.set.members).to_string()}});
      return kOk;
    };
  });

  auto* pds_cmd = app.add_subcommand("pds-reduced", "All reduced perfect difference sets for q <= 8");
  pds_cmd->add_option("--q", o.q, "Order of the plane")->required();
  common(pds_cmd);
  pds_cmd->callback([&] {
    run = [&] {
      const auto sets = reduced_difference_sets(o.q);
      Json list = Json::array();
      for (const DifferenceSet& d : sets) list.push_back(to_json(d));
      Json j{{"q", o.q}, {"N", o.q * o.q + o.q + 1}, {"count", sets.size()}, {"sets", list}};
      if (prime_power(o.q)) j["expected"] = expected_reduced_count(o.q);
      emit_json(o, j);
      return kOk;
    };
  });

  auto* subst_cmd = app.add_subcommand("substitute", "Flatten a {U,V} word and its reversal");
  subst_cmd->add_option("--U", o.u, "Block for U as +/- string")->required();
  subst_cmd->add_option("--V", o.v, "Block for V as +/- string")->required();
  subst_cmd->add_option("--word", o.word, "Word over U and V")->required();
  common(subst_cmd);
  subst_cmd->callback([&] {
    run = [&] {
      const SubstitutionWord w = SubstitutionWord::parse(o.word, o.u, o.v);
      const ReversalReport r = verify_reversal_identity(w);
      emit_json(o, Json{{"sigma", flatten(w).to_string()},
                        {"reversed_word", reverse_word(w).letters},
                        {"tau", flatten(reverse_word(w)).to_string()},
                        {"correlation", to_json(r.a_word)},
                        {"equal", r.equal},
                        {"same_phi_orbit", r.same_phi_orbit}});
      return r.equal ? kOk : kVerifyFailed;
    };
  });

  auto* blocks_cmd = app.add_subcommand("blocks", "Block profile and Laplacian of a configuration on Z/N");
  group_config(blocks_cmd);
  blocks_cmd->callback([&] {
    run = [&] {
      const SpinConfig s = config_arg(o);
      const BlockProfile p = blocks_of(s);
      const auto lap = laplacian(correlate_fast(s));
      const SignedMultiset delta = SignedMultiset::from_vector(lap);
      emit_json(o, Json{{"profile", to_json(p)},
                        {"normal_form", to_json(dihedral_normal_form(p))},
                        {"multiset", block_multiset(p)},
                        {"k", p.k()},
                        {"delta", to_json(delta)},
                        {"l1", l1_norm(lap)},
                        {"subset_sum_injective", subset_sum_injective(p)}});
      return delta == delta_from_profile(p) ? kOk : kVerifyFailed;
    };
  });

  auto* recon_cmd = app.add_subcommand("reconstruct", "Block profiles with a given Laplacian");
  recon_cmd->add_option("--n", o.n, "N")->required();
  recon_cmd->add_option("--delta", o.delta, "Signed multiset as JSON [[t, c], ...]")->required();
  common(recon_cmd);
  recon_cmd->callback([&] {
    run = [&] {
      Json parsed;
      try {
        parsed = Json::parse(o.delta);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("--delta is not JSON: ") + e.what());
      }
      const auto profiles = reconstruct_from_delta(signed_multiset_from_json(parsed, o.n), o.n);
      Json list = Json::array();
      for (const BlockProfile& p : profiles) list.push_back(to_json(p));
      emit_json(o, Json{{"N", o.n}, {"profiles", list}});
      return kOk;
    };
  });

  auto* four_cmd = app.add_subcommand("four-block-verify", "Check d_stab = d_sym for all <= 4 block configurations");
  four_cmd->add_option("--nmax", o.nmax, "Check N = nmin..nmax")->required();
  four_cmd->add_option("--nmin", o.nmin, "Smallest N")->check(CLI::Range(2, 40));
  common(four_cmd);
  four_cmd->callback([&] {
    run = [&] {
      Json rows = Json::array();
      bool ok = true;
      check_range(o);
      for (std::int64_t n = o.nmin; n <= o.nmax; ++n) {
        const RigidityReport r = verify_four_block_rigidity(n, enumeration(o));
        Json row{{"N", n}, {"checked", r.checked}, {"rigid", r.rigid}};
        if (r.counterexample) row["counterexample"] = *r.counterexample;
        rows.push_back(row);
        ok = ok && r.ok();
      }
      emit_json(o, rows);
      return ok ? kOk : kVerifyFailed;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify-paper", "Reproduce every reference example");
  verify_cmd->add_flag("--tamper", o.tamper, "Corrupt one expected value (harness self-test)");
  verify_cmd->add_flag("--verify-keys", o.verify_keys, "Store full vectors to rule out fingerprint collisions");
  common(verify_cmd);
  verify_cmd->callback([&] { run = [&] { return cmd_verify(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GroupMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}
