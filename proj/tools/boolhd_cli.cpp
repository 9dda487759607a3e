// boolhd command-line front end.
//
// Exit codes: 0 success, 1 bad input, 2 no feasible answer (unsatisfiable,
// unique model, no second model), 3 resource refusal (too large, no
// polynomial algorithm), 4 internal error.

#include <boolhd/boolhd.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

using json = nlohmann::json;
using namespace boolhd;

namespace {

struct Common {
  std::string formula;
  std::string assignment;
  std::string mode = "auto";
  int cap = 24;
  bool as_json = false;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Unsatisfiable:
    case ErrorKind::UniqueModel:
    case ErrorKind::NoSecondModel: return 2;
    case ErrorKind::TooLarge:
    case ErrorKind::NoPolyAlgorithm: return 3;
    case ErrorKind::Internal:
    case ErrorKind::ShapeUnavailable: return 4;
    default: return 1;
  }
}

Problem parse_problem(const std::string& s) {
  if (s == "nsol") return Problem::NSOL;
  if (s == "xsol") return Problem::XSOL;
  if (s == "msd") return Problem::MSD;
  fail(ErrorKind::Parse, "unknown problem '" + s + "'");
}

std::optional<Assignment> read_assignment(const Common& c, const Formula& phi, bool required) {
  if (c.assignment.empty()) {
    if (required) fail(ErrorKind::Parse, "--assignment is required");
    return std::nullopt;
  }
  Assignment m = parse_assignment(c.assignment);
  check_length(phi, m);
  return m;
}

json verdict_json(const Verdict& v) {
  return {{"coclone", v.label.name()},
          {"complexity", std::string(to_string(v.complexity))},
          {"tag", v.tag}};
}

// Independent re-check of a solver result before it is printed.
void verify(Problem p, const Formula& phi, const std::optional<Assignment>& m, const SolveOutcome& r) {
  ensure(satisfies(phi, r.witness), "witness does not satisfy the formula");
  if (p == Problem::MSD) {
    ensure(r.witness2 && satisfies(phi, *r.witness2), "second witness does not satisfy the formula");
    ensure(r.witness != *r.witness2, "witnesses coincide");
    ensure(hamming(r.witness, *r.witness2) == r.value, "value does not match the witnesses");
  } else {
    ensure(hamming(*m, r.witness) == r.value, "value does not match the witness");
    if (p == Problem::XSOL) ensure(r.witness != *m, "witness equals the input");
  }
}

void print_outcome(const std::string& cmd, Problem p, const SolveOutcome& r, double ms, bool as_json) {
  if (as_json) {
    json j{{"schema", 1},
           {"command", cmd},
           {"problem", std::string(to_string(p))},
           {"value", r.value},
           {"witnesses", json::array()},
           {"guarantee", r.guarantee.to_string()},
           {"route", r.route},
           {"verified", true},
           {"time_ms", ms}};
    j["witnesses"].push_back(to_string(r.witness));
    if (r.witness2) j["witnesses"].push_back(to_string(*r.witness2));
    j["verdict"] = r.verdict ? verdict_json(*r.verdict) : json(nullptr);
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "value " << r.value << "\n";
  std::cout << "witness " << to_string(r.witness);
  if (r.witness2) std::cout << " " << to_string(*r.witness2);
  std::cout << "\nguarantee " << r.guarantee.to_string() << "\nroute " << r.route << "\n";
  if (r.verdict)
    std::cout << "coclone " << r.verdict->label.name() << "\ncomplexity " << to_string(r.verdict->complexity) << "\n";
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int run_solve(const std::string& cmd, const std::string& problem, const Common& c) {
  const Problem p = parse_problem(problem);
  Formula phi = load_formula(c.formula);
  auto m = read_assignment(c, phi, p != Problem::MSD);
  SolverOptions opt{parse_mode(c.mode), c.cap};
  const auto t0 = std::chrono::steady_clock::now();
  SolveOutcome r;
  if (cmd == "oracle") r = oracle_optimize(p, phi, m, c.cap);
  else if (p == Problem::NSOL) r = solve_nsol(phi, *m, opt);
  else if (p == Problem::XSOL) r = solve_xsol(phi, *m, opt);
  else r = solve_msd(phi, opt);
  const double ms = elapsed_ms(t0);
  verify(p, phi, m, r);
  print_outcome(cmd, p, r, ms, c.as_json);
  return 0;
}

int run_decide(const std::string& question, const Common& c) {
  Formula phi = load_formula(c.formula);
  json j{{"schema", 1}, {"command", "decide"}, {"question", question}};
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Assignment> wit;
  bool answer = false;
  if (question == "sat") {
    if (auto m = sat_solve(phi, c.cap)) answer = true, wit.push_back(*m);
  } else if (question == "anothersat") {
    auto m = *read_assignment(c, phi, true);
    if (auto x = another_sat(phi, m, c.cap)) answer = true, wit.push_back(*x);
  } else if (question == "tssat") {
    if (auto pr = tssat(phi, c.cap)) answer = true, wit = {pr->first, pr->second};
  } else if (question == "anothersat-lt-n") {
    answer = another_sat_lt_n(phi, *read_assignment(c, phi, true), c.cap);
  } else {
    fail(ErrorKind::Parse, "unknown question '" + question + "'");
  }
  for (const auto& w : wit) ensure(satisfies(phi, w), "decision witness does not satisfy the formula");
  if (c.as_json) {
    j["answer"] = answer;
    j["witnesses"] = json::array();
    for (const auto& w : wit) j["witnesses"].push_back(to_string(w));
    j["time_ms"] = elapsed_ms(t0);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (answer ? "yes" : "no");
    for (const auto& w : wit) std::cout << " " << to_string(w);
    std::cout << "\n";
  }
  return 0;
}

int run_classify(const std::string& lang_path, bool as_json) {
  Language lang = load_language(lang_path);
  if (lang.size() == 0) fail(ErrorKind::Parse, "language file declares no relations");
  const CoCloneLabel label = classify(lang);
  if (as_json) {
    json j{{"schema", 1}, {"command", "classify"}, {"coclone", label.name()}, {"verdicts", json::object()}};
    for (auto p : kAllProblems) j["verdicts"][std::string(to_string(p))] = verdict_json(verdict(label, p));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "coclone " << label.name() << "\n";
  for (auto p : kAllProblems) {
    auto v = verdict(label, p);
    std::cout << to_string(p) << "=" << to_string(v.complexity) << " " << v.tag << "\n";
  }
  return 0;
}

int run_dualize(const std::string& formula, const std::string& lang_name) {
  Formula d = dualize_formula(load_formula(formula));
  std::cout << format_language(d.language()) << "---\n" << format_formula(d, lang_name);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamming-distance solvers for Boolean constraint languages"};
  app.require_subcommand(1);
  bool as_json = false;

  std::string lang_path;
  auto* cl = app.add_subcommand("classify", "Locate a language in the co-clone lattice");
  cl->add_option("--lang", lang_path, "language file")->required();
  cl->add_flag("--json", as_json);

  Common c;
  std::string solve_problem, oracle_problem, question;
  auto add_common = [&](CLI::App* sub, bool mode) {
    sub->add_option("--formula", c.formula, "formula file")->required();
    sub->add_option("--assignment", c.assignment, "bitstring, x1 first");
    sub->add_option("--cap", c.cap, "enumeration cap in variables");
    if (mode) sub->add_option("--mode", c.mode)->check(CLI::IsMember({"auto", "exact", "approx"}));
    sub->add_flag("--json", c.as_json);
  };
  auto* so = app.add_subcommand("solve", "Run the dispatched solver");
  so->add_option("problem", solve_problem)->required()->check(CLI::IsMember({"nsol", "xsol", "msd"}));
  add_common(so, true);
  auto* orc = app.add_subcommand("oracle", "Brute-force optimum");
  orc->add_option("problem", oracle_problem)->required()->check(CLI::IsMember({"nsol", "xsol", "msd"}));
  add_common(orc, false);
  auto* de = app.add_subcommand("decide", "Decision problems");
  de->add_option("question", question)
      ->required()
      ->check(CLI::IsMember({"sat", "anothersat", "tssat", "anothersat-lt-n"}));
  add_common(de, false);

  std::string dual_formula, dual_lang_name = "dual.lang";
  auto* du = app.add_subcommand("dualize", "Print the dual language and formula");
  du->add_option("--formula", dual_formula, "formula file")->required();
  du->add_option("--lang-name", dual_lang_name, "language file name used in the printed formula");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const bool want_json = as_json || c.as_json;
  try {
    if (*cl) return run_classify(lang_path, as_json);
    if (*so) return run_solve("solve", solve_problem, c);
    if (*orc) return run_solve("oracle", oracle_problem, c);
    if (*de) return run_decide(question, c);
    if (*du) return run_dualize(dual_formula, dual_lang_name);
  } catch (const Error& e) {
    if (want_json)
      std::cout << json{{"schema", 1}, {"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump(2)
                << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 1;
}
