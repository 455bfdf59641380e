#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stabdeg/correlation.hpp"
#include "stabdeg/spin.hpp"

namespace stabdeg {

/// A word over {U, V} together with the +-1 strings the letters stand for.
/// Letters are kept symbolic; flatten() is the only bridge to configurations.
struct SubstitutionWord {
  std::string letters;  // over 'U', 'V'
  std::vector<int> u;
  std::vector<int> v;

  static SubstitutionWord parse(std::string_view word, std::string_view u, std::string_view v);

  std::size_t length() const;
  friend bool operator==(const SubstitutionWord&, const SubstitutionWord&) = default;
};

/// Signs of a "+-" string.
std::vector<int> parse_signs(std::string_view text);
std::string format_signs(const std::vector<int>& signs);

/// The +-1 string obtained by concatenating the letters.
std::vector<int> expand(const SubstitutionWord& w);
/// expand(w) as a configuration on Z/NZ; N >= 2.
SpinConfig flatten(const SubstitutionWord& w);
/// Letter order reversed, U and V unchanged.
SubstitutionWord reverse_word(const SubstitutionWord& w);
/// Replaces U and V by the expansions of two words, so words can be nested.
SubstitutionWord substitute(std::string letters, const SubstitutionWord& u_word, const SubstitutionWord& v_word);

struct ReversalReport {
  CorrelationVector a_word;
  CorrelationVector a_reversed;
  bool equal = false;
  bool same_phi_orbit = false;
};

ReversalReport verify_reversal_identity(const SubstitutionWord& w);

}  // namespace stabdeg
