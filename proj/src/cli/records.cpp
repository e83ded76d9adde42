#include "vinpos/cli/records.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace vinpos::cli {

namespace {

constexpr std::string_view kHeader = "sigma,tau,scheme,mu,method,case,occurrences,rank";

std::string quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_row(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quote in CSV row");
  return fields;
}

template <class Int>
Int parse_int(const std::string& s, std::string_view what) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::runtime_error("bad " + std::string(what) + " field '" + s + "'");
  }
  return v;
}

}  // namespace

SurveyRecord make_record(const Permutation& sigma, const Permutation& tau,
                         const VincularScheme& scheme, const MobiusEvaluation& eval) {
  SurveyRecord r;
  r.sigma = sigma.str();
  r.tau = tau.str();
  r.scheme = scheme.fingerprint();
  r.mu = eval.value;
  r.method = std::string(to_string(eval.method));
  if (eval.case_label) r.case_label = std::string(to_string(*eval.case_label));
  r.occurrences = eval.occurrence_count;
  r.rank = eval.rank;
  return r;
}

Json to_json(const SurveyRecord& r) {
  Json j = {
      {"sigma", r.sigma},
      {"tau", r.tau},
      {"scheme", r.scheme},
      {"mu", r.mu},
      {"method", r.method},
      {"case", nullptr},
      {"occurrences", r.occurrences},
      {"rank", r.rank},
  };
  if (r.case_label) j["case"] = *r.case_label;
  return j;
}

SurveyRecord record_from_json(const Json& j) {
  SurveyRecord r;
  r.sigma = j.at("sigma").get<std::string>();
  r.tau = j.at("tau").get<std::string>();
  r.scheme = j.at("scheme").get<std::string>();
  r.mu = j.at("mu").get<std::int64_t>();
  r.method = j.at("method").get<std::string>();
  if (!j.at("case").is_null()) r.case_label = j.at("case").get<std::string>();
  r.occurrences = j.at("occurrences").get<std::size_t>();
  r.rank = j.at("rank").get<std::int64_t>();
  return r;
}

std::string_view csv_header() { return kHeader; }

std::string to_csv_row(const SurveyRecord& r) {
  std::string out;
  out += quote(r.sigma) + ',';
  out += quote(r.tau) + ',';
  out += quote(r.scheme) + ',';
  out += std::to_string(r.mu) + ',';
  out += quote(r.method) + ',';
  out += (r.case_label ? quote(*r.case_label) : std::string()) + ',';
  out += std::to_string(r.occurrences) + ',';
  out += std::to_string(r.rank);
  return out;
}

SurveyRecord parse_csv_row(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  auto f = split_row(line);
  if (f.size() != 8) {
    throw std::runtime_error("expected 8 CSV fields, got " + std::to_string(f.size()));
  }
  SurveyRecord r;
  r.sigma = f[0];
  r.tau = f[1];
  r.scheme = f[2];
  r.mu = parse_int<std::int64_t>(f[3], "mu");
  r.method = f[4];
  if (!f[5].empty()) r.case_label = f[5];
  r.occurrences = parse_int<std::size_t>(f[6], "occurrences");
  r.rank = parse_int<std::int64_t>(f[7], "rank");
  return r;
}

void write_csv(std::ostream& out, const std::vector<SurveyRecord>& records,
               bool with_header) {
  if (with_header) out << kHeader << '\n';
  for (const auto& r : records) out << to_csv_row(r) << '\n';
}

std::vector<SurveyRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) throw std::runtime_error("unexpected CSV header '" + line + "'");
  std::vector<SurveyRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // A quoted field may span lines; quotes balance once the record ends.
    std::string next;
    while (std::count(line.begin(), line.end(), '"') % 2 == 1 && std::getline(in, next)) {
      line += '\n';
      line += next;
    }
    out.push_back(parse_csv_row(line));
  }
  return out;
}

}  // namespace vinpos::cli
