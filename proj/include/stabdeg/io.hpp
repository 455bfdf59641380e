#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabdeg/blocks.hpp"
#include "stabdeg/constructions.hpp"
#include "stabdeg/correlation.hpp"
#include "stabdeg/degeneracy.hpp"

namespace stabdeg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSurveyHeader = "N,rep,d_sym,d_stab,ratio";
inline constexpr const char* kMsdHeader = "N,image_size,msd,msd_over_sym,avg_dstab_over_sym";

/// {"group": "Z4", "values": [...]}
Json to_json(const CorrelationVector& corr);
CorrelationVector correlation_from_json(const Json& j);

/// [[t, c], ...] ascending in t.
Json to_json(const SignedMultiset& s);
SignedMultiset signed_multiset_from_json(const Json& j, std::int64_t n);

/// Sorted member list.
Json to_json(const DifferenceSet& d);
Json to_json(const BlockProfile& p);

void write_survey_csv(std::ostream& out, const std::vector<SurveyRow>& rows, bool header = true);
void write_msd_csv(std::ostream& out, const std::vector<MsdRow>& rows, bool header = true);

/// Splits CSV text into rows of fields. The schemas never quote fields.
std::vector<std::vector<std::string>> read_csv(std::istream& in);

}  // namespace stabdeg
