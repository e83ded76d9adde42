#include "vinpos/cli/commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>

#include "vinpos/cli/records.hpp"
#include "vinpos/cli/sweeps.hpp"
#include "vinpos/errors.hpp"
#include "vinpos/json.hpp"
#include "vinpos/mobius.hpp"
#include "vinpos/poset.hpp"
#include "vinpos/vincular.hpp"

namespace vinpos::cli {

namespace {

// Raised for malformed arguments that CLI11 cannot see (permutation and
// scheme grammar, enumeration caps).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Permutation parse_perm(const std::string& text) {
  try {
    return Permutation::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

VincularScheme parse_scheme(const std::string& text) {
  try {
    return VincularScheme::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void check_cap(std::size_t len, bool acknowledged, const std::string& flag) {
  const std::size_t cap = acknowledged ? kMaxPermutationLength : kEnumerationCap;
  if (len > cap) {
    throw UsageError(flag + " " + std::to_string(len) + " exceeds the cap of " +
                     std::to_string(cap) +
                     (acknowledged ? std::string() : std::string(" (override with --i-know)")));
  }
}

struct Options {
  std::string scheme = "quasi";
  unsigned jobs = 1;

  std::string a;
  std::string b;
  bool list = false;
  std::string format;
  std::string method = "auto";

  std::size_t max_len = 0;
  std::string out_path;
  bool resume = false;
  bool i_know = false;

  std::string which;
  std::size_t sigma_max = 3;
  std::size_t len_cap = 8;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::size_t limit = 0;
};

int cmd_contains(const Options& o, std::ostream& out) {
  const auto pattern = parse_perm(o.a);
  const auto text = parse_perm(o.b);
  const auto scheme = parse_scheme(o.scheme);
  if (pattern.size() > text.size()) {
    out << "false\n";
    return kExitNegative;
  }
  const auto occs = occurrences(pattern, text, scheme);
  out << (occs.empty() ? "false" : "true") << '\n';
  if (o.list) {
    for (const auto& occ : occs) out << occ.str() << '\n';
  }
  return occs.empty() ? kExitNegative : kExitOk;
}

int cmd_interval(const Options& o, std::ostream& out) {
  const auto sigma = parse_perm(o.a);
  const auto tau = parse_perm(o.b);
  const auto scheme = parse_scheme(o.scheme);
  const Interval iv = interval(sigma, tau, scheme);
  if (o.format == "json") {
    out << interval_json(iv).dump() << '\n';
  } else if (o.format == "dot") {
    out << export_dot(iv);
  } else {
    out << "interval [" << sigma.str() << ", " << tau.str() << "] scheme "
        << scheme.fingerprint() << " rank " << iv.rank() << ": " << iv.size()
        << " elements, " << iv.edges().size() << " edges\n";
    for (std::size_t r = 0; r <= iv.rank(); ++r) {
      out << "level " << r << ":";
      for (const auto& p : iv.level(r)) out << ' ' << p.str();
      out << '\n';
    }
  }
  return kExitOk;
}

int cmd_mobius(const Options& o, std::ostream& out) {
  const auto sigma = parse_perm(o.a);
  const auto tau = parse_perm(o.b);
  const auto scheme = parse_scheme(o.scheme);
  const auto eval = mobius(sigma, tau, scheme, parse_strategy(o.method));
  out << evaluation_json(sigma, tau, scheme, eval).dump() << '\n';
  return kExitOk;
}

int cmd_verify_theorem(const Options& o, std::ostream& out) {
  if (o.max_len < 2 || o.max_len > kEnumerationCap) {
    throw UsageError("--max-len must be between 2 and " + std::to_string(kEnumerationCap));
  }
  const auto report = verify_theorem(o.max_len, o.jobs);
  out << "verify-theorem max-len " << report.max_len << ": " << report.targets
      << " targets\n";
  for (const auto& [label, n] : report.by_case) {
    out << "  " << to_string(label) << ": " << n << '\n';
  }
  for (const auto& m : report.mismatches) {
    out << "mismatch sigma=" << m.sigma.str() << " tau=" << m.tau.str()
        << " case=" << to_string(m.label) << " closed_form=" << m.closed_form
        << " brute_force=" << m.brute_force << '\n';
  }
  out << "checked " << report.checked << " pairs, " << report.matched << " matched, "
      << report.mismatches.size() << " mismatches\n";
  out << "oracle directions disagree on " << report.direction_disagreements
      << " intervals\n";
  return report.mismatches.empty() && report.direction_disagreements == 0 ? kExitOk
                                                                           : kExitNegative;
}

std::vector<SurveyRecord> load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  if (in.peek() == std::ifstream::traits_type::eof()) return {};
  try {
    return read_csv(in);
  } catch (const std::runtime_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

int cmd_survey(const Options& o, std::ostream& out, std::ostream& err) {
  const auto sigma = parse_perm(o.a);
  const auto scheme = parse_scheme(o.scheme);
  check_cap(o.max_len, o.i_know, "--max-len");
  const bool json = o.format == "json";
  if (o.resume && (json || o.out_path.empty())) {
    throw UsageError("--resume needs --out with CSV output");
  }

  std::vector<SurveyRecord> cached;
  std::set<std::string> skip;
  if (o.resume) {
    for (auto& r : load_cache(o.out_path)) {
      if (r.sigma == sigma.str() && r.scheme == scheme.fingerprint() &&
          Permutation::parse(r.tau).size() <= o.max_len) {
        skip.insert(r.tau);
        cached.push_back(std::move(r));
      }
    }
  }
  const auto fresh = survey(sigma, o.max_len, scheme, skip, o.jobs);

  std::ostream* summary = &out;
  if (o.out_path.empty()) {
    if (json) {
      Json arr = Json::array();
      for (const auto& r : fresh) arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
    } else {
      write_csv(out, fresh);
    }
    summary = &err;
  } else if (json) {
    std::ofstream file(o.out_path, std::ios::trunc);
    if (!file) throw IoError("cannot write " + o.out_path);
    Json arr = Json::array();
    for (const auto& r : fresh) arr.push_back(to_json(r));
    file << arr.dump(2) << '\n';
    if (!file) throw IoError("cannot write " + o.out_path);
  } else {
    const bool append = o.resume && std::filesystem::exists(o.out_path) &&
                        std::filesystem::file_size(o.out_path) > 0;
    std::ofstream file(o.out_path, append ? std::ios::app : std::ios::trunc);
    if (!file) throw IoError("cannot write " + o.out_path);
    write_csv(file, fresh, !append);
    if (!file) throw IoError("cannot write " + o.out_path);
  }

  std::vector<SurveyRecord> all = cached;
  all.insert(all.end(), fresh.begin(), fresh.end());
  const auto s = summarize(all);
  *summary << "survey sigma=" << sigma.str() << " scheme=" << scheme.fingerprint()
           << " max-len " << o.max_len << ": " << all.size() << " records ("
           << cached.size() << " reused, " << fresh.size() << " computed)\n";
  for (const auto& [mu, n] : s.distribution) *summary << "mu=" << mu << ": " << n << '\n';
  if (s.witness) {
    *summary << "max |mu| = " << s.max_abs << " at tau=" << *s.witness << '\n';
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, const CLI::App& check) {
  if (o.which == "direct_sum") {
    check_cap(o.len_cap, o.i_know, "--len-cap");
    const auto scheme = parse_scheme(o.scheme);
    const auto cases = check_direct_sum(o.sigma_max, o.len_cap, scheme, o.jobs);
    std::size_t flagged = 0;
    out << "direct_sum scheme=" << scheme.fingerprint() << " sigma-max " << o.sigma_max
        << " len-cap " << o.len_cap << '\n';
    for (const auto& c : cases) {
      out << "sigma=" << c.sigma.str() << " copies=" << c.copies << " tau=" << c.tau.str()
          << " mu=" << c.mu << (c.flagged ? " FLAG" : "") << '\n';
      flagged += c.flagged ? 1 : 0;
    }
    out << cases.size() << " instances, " << flagged << " flagged\n";
    return flagged == 0 ? kExitOk : kExitNegative;
  }
  if (o.which == "consecutive_bound") {
    const std::size_t max_len = o.max_len == 0 ? 7 : o.max_len;
    check_cap(max_len, o.i_know, "--max-len");
    const auto report = check_mobius_bound(max_len, VincularScheme::consecutive(), 1, o.jobs);
    for (const auto& f : report.flags) {
      out << "sigma=" << f.sigma.str() << " tau=" << f.tau.str() << " mu=" << f.mu
          << " FLAG\n";
    }
    out << "consecutive_bound max-len " << max_len << ": " << report.intervals
        << " intervals, max |mu| = " << report.max_abs << ", " << report.flags.size()
        << " flagged\n";
    return report.flags.empty() ? kExitOk : kExitNegative;
  }
  if (o.which == "equiv_search") {
    const std::size_t max_len = o.max_len == 0 ? 6 : o.max_len;
    check_cap(max_len, o.i_know, "--max-len");
    std::vector<VincularScheme> schemes;
    if (check.count("--scheme") > 0) {
      schemes.push_back(parse_scheme(o.scheme));
    } else {
      schemes = random_schemes(o.trials, max_len, o.seed);
    }
    const auto report = equiv_search(schemes, max_len, o.jobs);
    std::size_t shown = 0;
    for (const auto& w : report.witnesses) {
      if (o.limit != 0 && shown == o.limit) break;
      out << "scheme=" << w.scheme << " sigma=" << w.sigma.str() << " tau=" << w.tau.str()
          << " contains=" << (w.contains ? "true" : "false")
          << " leq=" << (w.leq ? "true" : "false") << '\n';
      ++shown;
    }
    out << "equiv_search max-len " << max_len << ": " << report.schemes << " schemes, "
        << report.pairs << " pairs, " << report.witnesses.size() << " disagreements\n";
    return report.witnesses.empty() ? kExitOk : kExitNegative;
  }
  throw UsageError("unknown check '" + o.which + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Vincular pattern posets: containment, intervals and Moebius values",
               "vinpos"};
  app.require_subcommand(1);

  auto add_scheme = [&](CLI::App* sub) {
    return sub->add_option("--scheme", o.scheme,
                           "quasi | classical | consecutive | a=1,0,.. | rows=..;..:fill=0|1");
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  };

  auto* contains_cmd = app.add_subcommand("contains", "Is the pattern contained in the text?");
  contains_cmd->add_option("pattern", o.a)->required();
  contains_cmd->add_option("text", o.b)->required();
  add_scheme(contains_cmd);
  contains_cmd->add_flag("--list", o.list, "Print every occurrence");

  auto* interval_cmd = app.add_subcommand("interval", "Render the interval [sigma, tau]");
  interval_cmd->add_option("sigma", o.a)->required();
  interval_cmd->add_option("tau", o.b)->required();
  add_scheme(interval_cmd);
  interval_cmd->add_option("--format", o.format)
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->default_str("text");

  auto* mobius_cmd = app.add_subcommand("mobius", "Moebius function mu(sigma, tau)");
  mobius_cmd->add_option("sigma", o.a)->required();
  mobius_cmd->add_option("tau", o.b)->required();
  add_scheme(mobius_cmd);
  mobius_cmd->add_option("--method", o.method)
      ->check(CLI::IsMember({"auto", "brute", "theorem"}));

  auto* verify_cmd =
      app.add_subcommand("verify-theorem", "Closed form against brute force, exhaustively");
  verify_cmd->add_option("--max-len", o.max_len)->required();
  add_jobs(verify_cmd);

  auto* survey_cmd = app.add_subcommand("survey", "mu(sigma, tau) for every tau above sigma");
  survey_cmd->add_option("sigma", o.a)->required();
  survey_cmd->add_option("--max-len", o.max_len)->required();
  add_scheme(survey_cmd);
  survey_cmd->add_option("--out", o.out_path, "Record file");
  survey_cmd->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  survey_cmd->add_flag("--resume", o.resume, "Reuse records already in --out");
  survey_cmd->add_flag("--i-know", o.i_know, "Lift the enumeration cap");
  add_jobs(survey_cmd);

  auto* check_cmd = app.add_subcommand("check", "Conjecture and property reports");
  check_cmd->add_option("which", o.which)
      ->required()
      ->check(CLI::IsMember({"direct_sum", "consecutive_bound", "equiv_search"}));
  add_scheme(check_cmd);
  check_cmd->add_option("--sigma-max", o.sigma_max);
  check_cmd->add_option("--len-cap", o.len_cap);
  check_cmd->add_option("--max-len", o.max_len);
  check_cmd->add_option("--trials", o.trials);
  check_cmd->add_option("--seed", o.seed);
  check_cmd->add_option("--limit", o.limit, "Witness lines to print (0 = all)");
  check_cmd->add_flag("--i-know", o.i_know, "Lift the enumeration cap");
  add_jobs(check_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*contains_cmd) return cmd_contains(o, out);
    if (*interval_cmd) {
      if (o.format.empty()) o.format = "text";
      return cmd_interval(o, out);
    }
    if (*mobius_cmd) return cmd_mobius(o, out);
    if (*verify_cmd) return cmd_verify_theorem(o, out);
    if (*survey_cmd) return cmd_survey(o, out, err);
    if (*check_cmd) return cmd_check(o, out, *check_cmd);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const NotComparableError& e) {
    err << "not comparable: " << e.what() << '\n';
    return kExitNegative;
  } catch (const NotApplicableError& e) {
    err << e.what() << '\n';
    return kExitNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNegative;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"vinpos"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace vinpos::cli
