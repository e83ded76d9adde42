#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vinpos/json.hpp"
#include "vinpos/mobius.hpp"

namespace vinpos::cli {

/// One computed value of a survey. Mirrors the Moebius JSON result.
struct SurveyRecord {
  std::string sigma;
  std::string tau;
  std::string scheme;
  std::int64_t mu = 0;
  std::string method;
  std::optional<std::string> case_label;
  std::size_t occurrences = 0;
  std::int64_t rank = 0;

  friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

SurveyRecord make_record(const Permutation& sigma, const Permutation& tau,
                         const VincularScheme& scheme, const MobiusEvaluation& eval);

Json to_json(const SurveyRecord& r);
SurveyRecord record_from_json(const Json& j);

/// "sigma,tau,scheme,mu,method,case,occurrences,rank"
std::string_view csv_header();
/// RFC 4180 quoting; an absent case is an empty field.
std::string to_csv_row(const SurveyRecord& r);
SurveyRecord parse_csv_row(std::string_view line);

void write_csv(std::ostream& out, const std::vector<SurveyRecord>& records,
               bool with_header = true);
/// Throws std::runtime_error on a missing or wrong header or a bad row.
std::vector<SurveyRecord> read_csv(std::istream& in);

}  // namespace vinpos::cli
