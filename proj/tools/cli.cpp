#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ctxdrt/check.hpp"
#include "ctxdrt/compare.hpp"
#include "ctxdrt/errors.hpp"
#include "ctxdrt/lcon.hpp"
#include "ctxdrt/projection.hpp"
#include "ctxdrt/tableau.hpp"
#include "ctxdrt/text.hpp"

namespace ctxdrt::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "ctxdrt/1";

struct InputFailure : Error {
  using Error::Error;
};

// A failure that has already been reported.
struct Reported {
  int code;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure("cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

class Session {
 public:
  Session(const RunConfig& config, std::ostream& out, std::ostream& err) : cfg_(config), out_(out), err_(err) {
    bounds_.prover.gammaLimit = config.gammaLimit;
    bounds_.prover.depthLimit = config.depthLimit;
    bounds_.modelBound = config.modelBound;
  }

  int dispatch() {
    const auto& c = cfg_.command;
    if (c == "parse") return cmd_parse();
    if (c == "resolve") return cmd_resolve();
    if (c == "readings") return cmd_readings();
    if (c == "extract") return cmd_extract();
    if (c == "prove") return cmd_prove();
    if (c == "compare") return cmd_compare();
    err_ << "unknown command: " << c << "\n";
    return kInputError;
  }

 private:
  template <typename T, typename Fn>
  T parsed(const std::string& path, const std::string& text, Fn&& fn) {
    try {
      return fn(text);
    } catch (const ParseError& e) {
      err_ << path << ": " << e.what() << "\n";
      std::size_t begin = text.rfind('\n', e.span.start == 0 ? 0 : e.span.start - 1);
      begin = begin == std::string::npos || e.span.start == 0 ? 0 : begin + 1;
      if (e.span.start < begin) begin = 0;
      std::size_t end = text.find('\n', begin);
      std::string line = text.substr(begin, end == std::string::npos ? std::string::npos : end - begin);
      std::size_t width = std::max<std::size_t>(1, std::min(e.span.end, begin + line.size()) - e.span.start);
      err_ << "  " << line << "\n  " << std::string(e.span.start - begin, ' ') << std::string(width, '^') << "\n";
      throw Reported{kInputError};
    }
  }

  Drs load_root() {
    std::string text = read_input(cfg_.input);
    Drs root = parsed<Drs>(cfg_.input, text, [](const std::string& t) { return parse_drs(t); });
    auto report = validate(root);
    if (!report.pure) {
      err_ << cfg_.input << ": referent introduced more than once:";
      for (const auto& r : report.duplicates) err_ << " " << r.name;
      err_ << "\n";
      throw Reported{kInputError};
    }
    return root;
  }

  BackgroundTheory load_background() {
    BackgroundTheory bg;
    if (cfg_.background.empty()) return bg;
    std::string text = read_input(cfg_.background);
    bg.postulates =
        parsed<std::vector<Drs>>(cfg_.background, text, [](const std::string& t) { return parse_drs_list(t); });
    return bg;
  }

  static json bindings_json(const Resolution& r) {
    json b = json::object();
    for (const auto& x : r.bindings) b[x.anaphor.name] = x.antecedent.name;
    return b;
  }

  static json stats_json(const ProofStats& s) {
    return json{{"ruleApplications", s.ruleApplications},
                {"perRule", s.perRule},
                {"contextConditionExpansions", s.contextConditionExpansions},
                {"branches", s.branches},
                {"closures", s.closures}};
  }

  void emit(json j) {
    j["version"] = kSchema;
    out_ << j.dump(2) << "\n";
  }

  int cmd_parse() {
    std::string text = read_input(cfg_.input);
    auto drss = parsed<std::vector<Drs>>(cfg_.input, text, [](const std::string& t) { return parse_drs_list(t); });
    int code = kOk;
    json list = json::array();
    for (const auto& k : drss) {
      auto report = validate(k);
      if (!report.pure) {
        err_ << cfg_.input << ": referent introduced more than once in " << print_drs(k) << "\n";
        code = kInputError;
      }
      json free = json::array();
      for (const auto& r : report.free) free.push_back(r.name);
      list.push_back(json{{"drs", print_drs(k)}, {"pure", report.pure}, {"free", free}});
      if (!cfg_.json) out_ << print_drs(k) << "\n";
    }
    if (cfg_.json) emit(json{{"drss", list}});
    return code;
  }

  int cmd_resolve() {
    Drs root = load_root();
    json alphas = json::array();
    for (const auto& path : presupposition_paths(root)) {
      const Drs& body = drs_at(root, path);
      json entry{{"path", path.to_string()}, {"alpha", print_drs(body)}};
      if (!cfg_.json) out_ << "alpha at " << path.to_string() << ": " << print_drs(body) << "\n";

      json resolutions = json::array();
      auto found = resolve_alpha(path, root);
      if (!cfg_.json) out_ << "  resolutions:" << (found.empty() ? " none" : "") << "\n";
      for (const auto& r : found) {
        Drs result = apply_resolution(root, path, r);
        resolutions.push_back(json{{"bindings", bindings_json(r)}, {"drs", print_drs(result)}});
        if (!cfg_.json) out_ << "    {" << r.to_string() << "} " << print_drs(result) << "\n";
      }
      entry["resolutions"] = resolutions;

      json candidates = json::array();
      try {
        auto cands = enumerate_candidates(root, path);
        if (!cfg_.json) out_ << "  accommodation:\n";
        for (const auto& c : cands) {
          const Reading& r = c.reading;
          json j{{"site", site_name(r.site)},
                 {"path", r.sitePath.to_string()},
                 {"bindings", bindings_json(r.resolution)},
                 {"blocked", c.blocked ? json(*c.blocked) : json(nullptr)}};
          if (!c.blocked) j["drs"] = print_drs(r.result);
          candidates.push_back(j);
          if (!cfg_.json) {
            out_ << "    " << site_name(r.site) << " at " << r.sitePath.to_string() << " {"
                 << r.resolution.to_string() << "}: ";
            out_ << (c.blocked ? "blocked, " + *c.blocked : print_drs(r.result)) << "\n";
          }
        }
        entry["candidates"] = candidates;
      } catch (const NotAccommodatable& e) {
        entry["candidates"] = nullptr;
        if (!cfg_.json) out_ << "  accommodation: not possible, " << e.what() << "\n";
      }
      alphas.push_back(entry);
    }
    if (cfg_.json) emit(json{{"alphas", alphas}});
    return kOk;
  }

  static json verdict_json(const std::optional<Verdict>& v, bool informative) {
    if (!v) return nullptr;
    CheckStatus s = informative ? v->informative : v->consistent;
    const std::string& by = informative ? v->informativeBy : v->consistentBy;
    json j{{"status", check_name(s)}};
    j["by"] = by.empty() ? json(nullptr) : json(by);
    return j;
  }

  static json step_json(const TrailStep& step) {
    json j{{"alpha", step.alphaPath.to_string()}};
    if (step.resolution) {
      j["site"] = "resolved";
      j["path"] = step.alphaPath.to_string();
      j["bindings"] = bindings_json(*step.resolution);
    } else {
      j["site"] = site_name(step.reading->site);
      j["path"] = step.reading->sitePath.to_string();
      j["bindings"] = bindings_json(step.reading->resolution);
    }
    j["informativity"] = verdict_json(step.verdict, true);
    j["consistency"] = verdict_json(step.verdict, false);
    return j;
  }

  int cmd_readings() {
    Drs root = load_root();
    if (cfg_.noFilter) return readings_unfiltered(root);
    BackgroundTheory bg = load_background();
    std::vector<ProjectionResult> results;
    try {
      results = project(root, bg, bounds_);
    } catch (const NoAdmissibleReading& e) {
      if (cfg_.json) emit(json{{"readings", json::array()}});
      err_ << e.what() << "\n";
      return kNoReading;
    }

    bool unknown = false;
    json list = json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      json trail = json::array();
      for (const auto& step : r.trail) {
        trail.push_back(step_json(step));
        if (step.verdict && !step.verdict->certain()) unknown = true;
      }
      json j = r.trail.empty() ? json{{"site", nullptr}, {"path", nullptr}, {"bindings", json::object()},
                                      {"informativity", nullptr}, {"consistency", nullptr}}
                               : trail.back();
      j.erase("alpha");
      j["drs"] = print_drs(r.result);
      j["trail"] = trail;
      list.push_back(j);
      if (!cfg_.json) {
        out_ << "reading " << i + 1 << ": " << print_drs(r.result) << "\n";
        for (const auto& step : r.trail) {
          out_ << "  alpha " << step.alphaPath.to_string() << ": ";
          if (step.resolution) {
            out_ << "resolved {" << step.resolution->to_string() << "}\n";
            continue;
          }
          const Verdict& v = *step.verdict;
          out_ << site_name(step.reading->site) << " at " << step.reading->sitePath.to_string() << " {"
               << step.reading->resolution.to_string() << "}, informativity " << check_name(v.informative)
               << ", consistency " << check_name(v.consistent) << "\n";
        }
      }
    }
    if (cfg_.json) emit(json{{"readings", list}});
    if (unknown) err_ << "some verdicts are unknown within the given bounds\n";
    return unknown ? kUnknown : kOk;
  }

  int readings_unfiltered(const Drs& root) {
    json list = json::array();
    std::size_t n = 0;
    for (const auto& path : presupposition_paths(root)) {
      if (drs_at(root, path).conditions.empty()) continue;
      for (const auto& r : enumerate_readings(root, path)) {
        list.push_back(json{{"alpha", path.to_string()},
                            {"site", site_name(r.site)},
                            {"path", r.sitePath.to_string()},
                            {"bindings", bindings_json(r.resolution)},
                            {"drs", print_drs(r.result)},
                            {"informativity", nullptr},
                            {"consistency", nullptr}});
        if (!cfg_.json)
          out_ << "reading " << ++n << ": " << site_name(r.site) << " at " << r.sitePath.to_string() << " {"
               << r.resolution.to_string() << "} " << print_drs(r.result) << "\n";
      }
    }
    if (cfg_.json) emit(json{{"readings", list}});
    return kOk;
  }

  int cmd_extract() {
    Drs root = load_root();
    Extraction ex = extract(root, load_background());
    json tasks = json::array();
    for (const auto& t : ex.tasks) {
      json ids = json::array();
      for (const auto& r : t.readings) ids.push_back(r.id());
      tasks.push_back(json{{"tag", t.tag + 1}, {"accommodated", print_drs(t.accommodated)}, {"readings", ids}});
    }
    if (cfg_.json) {
      json j{{"tasks", tasks}};
      if (ex.formula) j["formula"] = print_lcon(*ex.formula);
      emit(j);
      return kOk;
    }
    if (ex.formula) out_ << print_lcon(*ex.formula) << "\n";
    for (const auto& t : ex.tasks) {
      out_ << "# task " << t.tag + 1 << ":";
      for (const auto& r : t.readings) out_ << " " << r.id();
      out_ << "\n";
    }
    return kOk;
  }

  int cmd_prove() {
    std::string text = read_input(cfg_.input);
    LConFormula f = parsed<LConFormula>(cfg_.input, text, [](const std::string& t) { return parse_lcon(t); });
    LConProof proof = prove_lcon(f, bounds_.prover);
    bool unknown = false;
    json verdicts = json::array();
    for (std::size_t i = 0; i < proof.verdicts.size(); ++i) {
      TaskStatus s = proof.verdicts[i];
      unknown |= s == TaskStatus::OpenBounded;
      verdicts.push_back(json{{"tag", i + 1}, {"status", status_name(s)}});
      if (!cfg_.json) out_ << "task " << i + 1 << ": " << status_name(s) << "\n";
    }
    if (cfg_.json) {
      emit(json{{"formula", print_lcon(f)}, {"verdicts", verdicts}, {"stats", stats_json(proof.stats)}});
    } else {
      print_stats(proof.stats);
    }
    return unknown ? kUnknown : kOk;
  }

  void print_stats(const ProofStats& s) {
    out_ << "rule applications: " << s.ruleApplications << "\n";
    for (const auto& [rule, n] : s.perRule) out_ << "  " << rule << " " << n << "\n";
    out_ << "context condition expansions:\n";
    for (const auto& [cond, n] : s.contextConditionExpansions) out_ << "  " << cond << " " << n << "\n";
  }

  int cmd_compare() {
    Drs root = load_root();
    CostReport report = compare_cost(root, load_background(), bounds_.prover);
    bool unknown = false;
    json readings = json::array();
    for (const auto& r : report.readings) {
      unknown |= r.shared == TaskStatus::OpenBounded || r.naive == TaskStatus::OpenBounded;
      readings.push_back(json{{"reading", r.reading},
                              {"tag", r.tag + 1},
                              {"shared", status_name(r.shared)},
                              {"naive", status_name(r.naive)},
                              {"agree", r.agree()}});
    }
    json ratio = json::object();
    for (const auto& [cond, v] : report.contextExpansionRatio) ratio[cond] = v ? json(*v) : json(nullptr);

    if (cfg_.json) {
      json j{{"shared", stats_json(report.sharedStats)},
             {"naive", stats_json(report.naiveStats)},
             {"ratio", ratio},
             {"overallRatio", report.overallRatio},
             {"readings", readings},
             {"verdictsAgree", report.verdicts_agree()}};
      j["formula"] = report.formula ? json(print_lcon(*report.formula)) : json(nullptr);
      emit(j);
    } else {
      if (report.formula) out_ << print_lcon(*report.formula) << "\n";
      out_ << "rule applications: shared " << report.sharedStats.ruleApplications << ", naive "
           << report.naiveStats.ruleApplications << "\n";
      out_ << "context condition expansions (naive/shared):\n";
      const auto& s = report.sharedStats.contextConditionExpansions;
      const auto& n = report.naiveStats.contextConditionExpansions;
      for (const auto& [cond, v] : report.contextExpansionRatio) {
        auto count = [](const auto& m, const std::string& k) { return m.count(k) ? m.at(k) : std::size_t{0}; };
        out_ << "  " << cond << ": " << count(n, cond) << "/" << count(s, cond);
        if (v) out_ << " = " << *v;
        out_ << "\n";
      }
      out_ << "overall: " << report.overallRatio << "\n";
      for (const auto& r : report.readings)
        out_ << r.reading << ": shared " << status_name(r.shared) << ", naive " << status_name(r.naive) << "\n";
      out_ << "verdicts agree: " << (report.verdicts_agree() ? "yes" : "no") << "\n";
    }
    return unknown ? kUnknown : kOk;
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  CheckBounds bounds_;
};

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return Session(config, out, err).dispatch();
  } catch (const Reported& r) {
    return r.code;
  } catch (const NoAdmissibleReading& e) {
    err << e.what() << "\n";
    return kNoReading;
  } catch (const ResourceLimit& e) {
    err << e.what() << "\n";
    return kUnknown;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kInputError;
  }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Presupposition projection with shared-context inference"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Spec {
    const char* name;
    const char* help;
    bool usesBackground;
  };
  const Spec specs[] = {
      {"parse", "Echo DRSs in canonical form", false},
      {"resolve", "List resolutions and accommodation candidates per alpha", false},
      {"readings", "Project presuppositions and print surviving readings", true},
      {"extract", "Print the shared-context formula and its task tags", true},
      {"prove", "Decide every task of a context formula", false},
      {"compare", "Compare shared and per-task proof cost", true},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", cfg.input, "Input file, - for standard input")->required();
    if (s.usesBackground) sub->add_option("--bg", cfg.background, "Background postulates file")->check(CLI::ExistingFile);
    sub->add_option("--gamma", cfg.gammaLimit, "Gamma instances per formula and branch")->check(CLI::PositiveNumber);
    sub->add_option("--depth", cfg.depthLimit, "Node budget per task")->check(CLI::PositiveNumber);
    sub->add_option("--model-size", cfg.modelBound, "Largest domain for model search")->check(CLI::PositiveNumber);
    sub->add_flag("--json", cfg.json, "Machine-readable output");
    if (std::string(s.name) == "readings") sub->add_flag("--no-filter", cfg.noFilter, "Enumerate without checking");
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }
  return run(cfg, out, err);
}

}  // namespace ctxdrt::cli
