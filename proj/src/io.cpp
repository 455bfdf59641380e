#include "stabdeg/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "stabdeg/errors.hpp"

namespace stabdeg {

Json to_json(const CorrelationVector& corr) {
  return Json{{"group", corr.group.to_string()}, {"values", corr.values}};
}

CorrelationVector correlation_from_json(const Json& j) {
  try {
    CorrelationVector out{GroupSpec::parse(j.at("group").get<std::string>()),
                          j.at("values").get<std::vector<std::int64_t>>()};
    if (out.values.size() != out.group.order()) throw ParseError("correlation vector has wrong length");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed correlation JSON: ") + e.what());
  }
}

Json to_json(const SignedMultiset& s) {
  Json out = Json::array();
  for (const auto& [t, c] : s.terms) out.push_back(Json::array({t, c}));
  return out;
}

SignedMultiset signed_multiset_from_json(const Json& j, std::int64_t n) {
  try {
    SignedMultiset raw{n, {}};
    for (const auto& pair : j) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("signed multiset entries must be [t, c] pairs");
      raw.terms.emplace_back(pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>());
    }
    return SignedMultiset::from_vector(raw.to_vector());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed signed multiset JSON: ") + e.what());
  }
}

Json to_json(const DifferenceSet& d) { return Json(d.members); }

Json to_json(const BlockProfile& p) { return Json(p.m); }

void write_survey_csv(std::ostream& out, const std::vector<SurveyRow>& rows, bool header) {
  if (header) out << kSurveyHeader << '\n';
  for (const SurveyRow& r : rows)
    out << r.n << ',' << r.representative << ',' << r.d_sym << ',' << r.d_stab << ',' << format_rational(r.ratio)
        << '\n';
}

void write_msd_csv(std::ostream& out, const std::vector<MsdRow>& rows, bool header) {
  if (header) out << kMsdHeader << '\n';
  for (const MsdRow& r : rows)
    out << r.n << ',' << r.image_size << ',' << format_rational(r.msd) << ',' << format_rational(r.msd_over_sym)
        << ',' << format_rational(r.avg_dstab_over_sym) << '\n';
}

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (line.back() == ',') fields.emplace_back();
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace stabdeg
