#include "stabdeg/substitution.hpp"

#include <algorithm>

#include "stabdeg/errors.hpp"
#include "stabdeg/symmetry.hpp"

namespace stabdeg {

std::vector<int> parse_signs(std::string_view text) {
  std::vector<int> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '+') out.push_back(1);
    else if (c == '-') out.push_back(-1);
    else throw ParseError(std::string("invalid spin character '") + c + "'");
  }
  return out;
}

std::string format_signs(const std::vector<int>& signs) {
  std::string out;
  for (int s : signs) out.push_back(s > 0 ? '+' : '-');
  return out;
}

SubstitutionWord SubstitutionWord::parse(std::string_view word, std::string_view u, std::string_view v) {
  for (char c : word)
    if (c != 'U' && c != 'V') throw ParseError(std::string("invalid letter '") + c + "', expected U or V");
  return SubstitutionWord{std::string(word), parse_signs(u), parse_signs(v)};
}

std::size_t SubstitutionWord::length() const {
  const auto nu = static_cast<std::size_t>(std::count(letters.begin(), letters.end(), 'U'));
  return nu * u.size() + (letters.size() - nu) * v.size();
}

std::vector<int> expand(const SubstitutionWord& w) {
  std::vector<int> out;
  out.reserve(w.length());
  for (char c : w.letters) {
    const std::vector<int>& block = c == 'U' ? w.u : w.v;
    if (block.empty()) throw DomainError(std::string("letter ") + c + " is used but empty");
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

SpinConfig flatten(const SubstitutionWord& w) {
  const std::vector<int> signs = expand(w);
  if (signs.size() < 2) throw DomainError("flattened word must have length at least 2");
  return SpinConfig::from_signs(GroupSpec::cyclic(static_cast<std::int64_t>(signs.size())), signs);
}

SubstitutionWord reverse_word(const SubstitutionWord& w) {
  SubstitutionWord out = w;
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

SubstitutionWord substitute(std::string letters, const SubstitutionWord& u_word, const SubstitutionWord& v_word) {
  return SubstitutionWord{std::move(letters), expand(u_word), expand(v_word)};
}

ReversalReport verify_reversal_identity(const SubstitutionWord& w) {
  const SpinConfig sigma = flatten(w);
  const SpinConfig tau = flatten(reverse_word(w));
  ReversalReport r{correlate(sigma), correlate(tau)};
  r.equal = r.a_word == r.a_reversed;
  r.same_phi_orbit = same_phi_orbit(sigma, tau);
  return r;
}

}  // namespace stabdeg
