#pragma once

// Command-line front end. `run_cli` parses arguments into a JobSpec and
// dispatches it; exit codes: 0 ok, 1 parse/validation, 2 mathematical
// precondition, 3 coherence or failed verification.

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ykh/json.hpp"
#include "ykh/ykh.hpp"

namespace ykh::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kMath = 2, kCoherence = 3 };

struct JobSpec {
  std::string command;
  int d = 0;
  std::string chain;
  std::string subset;
  std::string braid;
  std::string corpus;
  std::string format = "text";
  std::string u_value;
  std::string z_value;
  bool enumerate = false;
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t samples = 20;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "0,2" -> {0, 2}; every residue must lie in 0..d-1.
inline std::vector<int> parse_subset(const std::string& text, int d) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto value = ykh::detail::parse_integer_token(std::string_view(item).substr(
        item.find_first_not_of(' ') == std::string::npos ? item.size() : item.find_first_not_of(' ')));
    if (!value) throw ValidationError("invalid subset entry '" + item + "'");
    if (*value < 0 || *value >= d) {
      throw ValidationError("subset entry " + std::to_string(*value) + " is not a residue mod " + std::to_string(d));
    }
    out.push_back(static_cast<int>(*value));
  }
  if (out.empty()) throw ValidationError("subset must be non-empty");
  return normalize_subset(d, out);
}

/// Accepts "a", "a,b", "bi", "a+bi", "a-bi".
inline std::complex<double> parse_complex(const std::string& text) {
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw ValidationError("invalid number '" + text + "'");
    }
    if (used != s.size()) throw ValidationError("invalid number '" + text + "'");
    return v;
  };
  if (auto comma = text.find(','); comma != std::string::npos)
    return {to_double(text.substr(0, comma)), to_double(text.substr(comma + 1))};
  if (text.empty()) throw ValidationError("empty number");
  if (text.back() != 'i') return {to_double(text), 0.0};
  std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag = [&](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return to_double(s);
  };
  if (split == std::string::npos) return {0.0, imag(body)};
  return {to_double(body.substr(0, split)), imag(body.substr(split))};
}

inline std::string format_complex(std::complex<double> c) {
  std::ostringstream os;
  os << std::setprecision(12) << c.real() << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i";
  return os.str();
}

struct BraidJob {
  std::string label;
  std::optional<BraidWord> braid;
  std::string error;
};

inline std::vector<BraidJob> collect_braids(const JobSpec& spec) {
  if (!spec.braid.empty() && !spec.corpus.empty()) throw ValidationError("use either --braid or --corpus");
  if (!spec.braid.empty()) {
    BraidWord b = parse_braid(spec.braid);
    return {BraidJob{print_braid(b), b, {}}};
  }
  if (spec.corpus.empty()) throw ValidationError("a braid (--braid) or corpus file (--corpus) is required");
  std::ifstream in(spec.corpus);
  if (!in) throw ValidationError("cannot open corpus file '" + spec.corpus + "'");
  std::vector<BraidJob> jobs;
  for (auto& rec : parse_corpus(in)) {
    std::string label = rec.name.empty() ? "line " + std::to_string(rec.line) : rec.name;
    if (rec.braid) jobs.push_back({label, rec.braid, {}});
    else jobs.push_back({label, std::nullopt, "line " + std::to_string(rec.line) + ": " + rec.error});
  }
  return jobs;
}

inline void require_order(const JobSpec& spec) {
  if (spec.d < 1) throw ValidationError("--d must be a positive integer");
}

/// Runs `body` on every braid; bad records and per-braid math errors are
/// reported on `err` and skipped. Returns the worst exit code seen.
template <typename Body>
int for_each_braid(const JobSpec& spec, std::ostream& err, Body body) {
  int status = kOk;
  for (const auto& job : collect_braids(spec)) {
    if (!job.braid) {
      err << "skipped " << job.error << "\n";
      status = std::max(status, static_cast<int>(kInvalid));
      continue;
    }
    try {
      body(job.label, *job.braid);
    } catch (const MathError& e) {
      err << "skipped " << job.label << ": " << e.what() << "\n";
      status = std::max(status, static_cast<int>(kMath));
    }
  }
  return status;
}

inline int run_invariant(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  require_order(spec);
  if (spec.subset.empty()) throw ValidationError("--subset is required");
  auto sol = solution_from_subset(spec.d, parse_subset(spec.subset, spec.d));
  std::optional<std::complex<double>> u, z;
  if (!spec.u_value.empty() || !spec.z_value.empty()) {
    if (spec.u_value.empty() || spec.z_value.empty()) throw ValidationError("--u and --z must be given together");
    u = parse_complex(spec.u_value);
    z = parse_complex(spec.z_value);
  }
  Json all = Json::array();
  int status = for_each_braid(spec, err, [&](const std::string& label, const BraidWord& b) {
    InvariantValue v = delta_invariant(sol, b);
    if (spec.format == "json") {
      Json j{{"name", label}, {"braid", print_braid(b)}, {"subset", subset_to_string(sol.order(), sol.subset())},
             {"value", to_json(v)}};
      if (u) j["approximate"] = format_complex(v.evaluate(*u, *z));
      all.push_back(j);
    } else {
      out << label << " => " << v.to_string() << "\n";
      if (u) out << "  approx at u=" << format_complex(*u) << ", z=" << format_complex(*z) << ": "
                 << format_complex(v.evaluate(*u, *z)) << "\n";
    }
  });
  if (spec.format == "json") out << all.dump(2) << "\n";
  return status;
}

inline int run_trace(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  require_order(spec);
  std::optional<ESolution> sol;
  if (!spec.subset.empty()) sol = solution_from_subset(spec.d, parse_subset(spec.subset, spec.d));
  Json all = Json::array();
  int status = for_each_braid(spec, err, [&](const std::string& label, const BraidWord& b) {
    TracePolynomial tp = trace_of_braid(spec.d, b);
    if (spec.format == "json") {
      Json j{{"name", label}, {"braid", print_braid(b)}};
      if (sol) j["trace"] = to_json(trace_poly_substitute(tp, *sol));
      else j["trace"] = to_json(tp);
      all.push_back(j);
    } else {
      out << label << " => " << (sol ? trace_poly_substitute(tp, *sol).to_string() : tp.to_string()) << "\n";
    }
  });
  if (spec.format == "json") out << all.dump(2) << "\n";
  return status;
}

inline int run_esystem(const JobSpec& spec, std::ostream& out) {
  require_order(spec);
  std::vector<ESolution> sols;
  if (spec.enumerate) {
    if (spec.d > 12) throw ValidationError("--enumerate supports d <= 12");
    sols = enumerate_solutions(spec.d);
  } else {
    if (spec.subset.empty()) throw ValidationError("esystem needs --subset or --enumerate");
    sols.push_back(solution_from_subset(spec.d, parse_subset(spec.subset, spec.d)));
  }
  if (spec.format == "json") {
    Json all = Json::array();
    for (const auto& s : sols) all.push_back(to_json(s));
    out << all.dump(2) << "\n";
    return kOk;
  }
  for (const auto& s : sols) {
    out << subset_to_string(s.order(), s.subset()) << ": zeta = " << ykh::to_string(zeta_value(s)) << ", x = (";
    for (std::size_t k = 0; k < s.values().size(); ++k) out << (k ? ", " : "") << s.values()[k].to_string();
    out << "), " << (verify_solution(s.order(), s.values()) ? "verified" : "NOT a solution") << "\n";
  }
  return kOk;
}

inline int run_verify(const JobSpec& spec, std::ostream& out) {
  std::vector<std::string> names;
  if (spec.suite == "all") names = suite_names();
  else names.push_back(spec.suite);
  SuiteOptions opt{spec.seed, spec.samples};
  std::vector<SuiteReport> reports;
  for (const auto& name : names) {
    auto report = run_suite(name, opt);
    if (!report) throw ValidationError("unknown suite '" + name + "'");
    reports.push_back(std::move(*report));
  }
  bool ok = true;
  if (spec.format == "json") {
    Json all = Json::array();
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        all.push_back(Json{{"suite", r.suite}, {"check", c.name}, {"cases", c.cases}, {"failures", c.failures},
                           {"first_failure", c.first_failure}});
      }
      ok = ok && r.passed();
    }
    out << Json{{"seed", spec.seed}, {"samples", spec.samples}, {"results", all}}.dump(2) << "\n";
  } else {
    out << "seed " << spec.seed << ", samples " << spec.samples << "\n";
    for (const auto& r : reports) {
      out << r.to_string();
      ok = ok && r.passed();
    }
  }
  return ok ? kOk : kCoherence;
}

inline int run_adelic(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  if (spec.chain.empty()) throw ValidationError("--chain is required");
  if (spec.subset.empty()) throw ValidationError("--subset is required");
  DivisorChain chain = parse_chain(spec.chain);
  auto subset = parse_subset(spec.subset, chain.base());
  Json all = Json::array();
  int status = for_each_braid(spec, err, [&](const std::string& label, const BraidWord& b) {
    auto values = adelic_delta(chain, subset, b);
    Json levels = Json::array();
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (spec.format == "json") {
        levels.push_back(Json{{"d", chain[j]},
                              {"subset", subset_to_string(chain[j], lift_subset(chain.base(), chain[j], subset))},
                              {"value", to_json(values[j])}});
      } else {
        levels.push_back(values[j].to_string());
      }
    }
    all.push_back(Json{{"name", label}, {"braid", print_braid(b)}, {"chain", chain.to_string()}, {"levels", levels}});
  });
  out << all.dump(2) << "\n";
  return status;
}

inline int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    if (spec.format != "text" && spec.format != "json") throw ValidationError("--format must be text or json");
    if (spec.command == "invariant") return run_invariant(spec, out, err);
    if (spec.command == "trace") return run_trace(spec, out, err);
    if (spec.command == "esystem") return run_esystem(spec, out);
    if (spec.command == "verify") return run_verify(spec, out);
    if (spec.command == "adelic") return run_adelic(spec, out, err);
    throw ValidationError("unknown command '" + spec.command + "'");
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const MathError& e) {
    err << "math error: " << e.what() << "\n";
    return kMath;
  } catch (const CoherenceError& e) {
    err << "coherence failure: " << e.what() << "\n";
    return kCoherence;
  }
}

inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("YKH_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// Parses argv-style arguments (without the program name) and runs the job.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Yokonuma-Hecke traces and link invariants", "ykh"};
  app.require_subcommand(1);
  JobSpec spec;
  spec.seed = default_seed();

  auto add_braid_source = [&](CLI::App* sub) {
    sub->add_option("--braid", spec.braid, "braid word \"[n:] l1 l2 ...\"");
    sub->add_option("--corpus", spec.corpus, "file of `name;braid` records");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", spec.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* inv = app.add_subcommand("invariant", "Delta_{d,S} of braid closures");
  inv->add_option("--d", spec.d, "modulus d")->required();
  inv->add_option("--subset", spec.subset, "residues of S, comma separated")->required();
  add_braid_source(inv);
  add_format(inv);
  inv->add_option("--u", spec.u_value, "numeric u (approximate evaluation)");
  inv->add_option("--z", spec.z_value, "numeric z (approximate evaluation)");

  auto* tr = app.add_subcommand("trace", "Markov trace tr_d of braids");
  tr->add_option("--d", spec.d, "modulus d")->required();
  tr->add_option("--subset", spec.subset, "specialize at X_{d,S}");
  add_braid_source(tr);
  add_format(tr);

  auto* es = app.add_subcommand("esystem", "E-system solutions X_{d,S}");
  es->add_option("--d", spec.d, "modulus d")->required();
  es->add_option("--subset", spec.subset, "residues of S");
  es->add_flag("--enumerate", spec.enumerate, "list every non-empty subset");
  add_format(es);

  auto* ver = app.add_subcommand("verify", "run a property suite");
  ver->add_option("--suite", spec.suite, "relations, markov, skein, esystem, adelic-coherence or all");
  ver->add_option("--seed", spec.seed, "random seed (default: $YKH_SEED or 1)");
  ver->add_option("--samples", spec.samples, "random cases per parameter set");
  add_format(ver);

  auto* ad = app.add_subcommand("adelic", "invariants along a divisor chain");
  ad->add_option("--chain", spec.chain, "divisor chain, e.g. 2,4,8")->required();
  ad->add_option("--subset", spec.subset, "residues of S mod the first entry")->required();
  add_braid_source(ad);
  add_format(ad);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "invalid arguments: " << e.what() << "\n";
    return kInvalid;
  }
  spec.command = app.get_subcommands().front()->get_name();
  return run(spec, out, err);
}

}  // namespace ykh::cli
