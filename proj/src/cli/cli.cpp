#include "pellab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "pellab/census.hpp"
#include "pellab/error.hpp"
#include "pellab/hurwitz.hpp"
#include "pellab/pell.hpp"
#include "pellab/poly_io.hpp"
#include "pellab/rational.hpp"

namespace pellab::cli {

namespace {

using nlohmann::json;

std::string schema(std::string_view command) { return "pellab." + std::string(command) + "/1"; }

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const json& value) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  file << value.dump(2) << '\n';
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, what + ": " + e.what());
  }
}

// Prefixes parse errors with the flag that carried the text.
template <class F>
auto labelled(const std::string& label, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Parse) throw;
    throw Error(ErrorCode::Parse, label + ": " + e.what());
  }
}

Poly poly_arg(const std::string& flag, const std::string& text) {
  return labelled(flag, [&] { return parse_poly(text); });
}

struct SolutionInput {
  std::string A, B, D, file;
  bool allow_d1 = false;
};

void add_solution_options(CLI::App* sub, SolutionInput& s) {
  sub->add_option("--A", s.A, "polynomial A");
  sub->add_option("--B", s.B, "polynomial B");
  sub->add_option("--D", s.D, "polynomial D");
  sub->add_option("--file", s.file, "solution JSON {A, B, D} (\"-\" for stdin)");
  sub->add_flag("--allow-d1", s.allow_d1, "accept deg D == 2");
}

struct Triple {
  Poly A, B, D;
};

Triple load_triple(const SolutionInput& s, std::istream& in) {
  if (!s.file.empty()) {
    const json j = parse_json_text(read_input(s.file, in), s.file);
    try {
      return {labelled("A", [&] { return poly_from_json(j.at("A")); }),
              labelled("B", [&] { return poly_from_json(j.at("B")); }),
              labelled("D", [&] { return poly_from_json(j.at("D")); })};
    } catch (const json::exception& e) {
      throw Error(ErrorCode::Parse, s.file + ": " + e.what());
    }
  }
  if (s.A.empty() || s.B.empty() || s.D.empty()) {
    throw Error(ErrorCode::InvalidArgument, "give --A, --B and --D, or --file");
  }
  return {poly_arg("--A", s.A), poly_arg("--B", s.B), poly_arg("--D", s.D)};
}

json solution_json(const PellSolution& sol) {
  return {{"A", to_string(sol.A)}, {"B", to_string(sol.B)}, {"D", to_string(sol.D)},
          {"n", sol.n},            {"d", sol.d}};
}

json solution_file_json(const PellSolution& sol) {
  return {{"A", to_json(sol.A)}, {"B", to_json(sol.B)}, {"D", to_json(sol.D)}};
}

std::string solution_line(const PellSolution& sol) {
  return "solution n=" + std::to_string(sol.n) + " d=" + std::to_string(sol.d);
}

void add_solution_text(CommandResult& r, const PellSolution& sol) {
  r.text.push_back(solution_line(sol));
  r.text.push_back("A = " + to_string(sol.A));
  r.text.push_back("B = " + to_string(sol.B));
  r.text.push_back("D = " + to_string(sol.D));
}

CommandResult rejected(std::string_view command, RejectionReason reason) {
  CommandResult r;
  r.status = Status::Rejected;
  r.payload = {{"schema", schema(command)},
               {"verdict", "rejected"},
               {"reason", std::string(to_string(reason))}};
  r.text.push_back("rejected: " + std::string(to_string(reason)));
  return r;
}

// Runs f on a verified solution, or reports why the input is not one.
CommandResult with_solution(std::string_view command, const SolutionInput& s, std::istream& in,
                            const std::function<CommandResult(const PellSolution&)>& f) {
  const Triple t = load_triple(s, in);
  const PellVerdict verdict = verify_pell(t.A, t.B, t.D, PellPolicy{s.allow_d1});
  if (const auto* reason = std::get_if<RejectionReason>(&verdict)) return rejected(command, *reason);
  return f(std::get<PellSolution>(verdict));
}

json report_json(const ValidationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"check", std::string(to_string(c.check))}, {"passed", c.passed}});
  }
  const BranchingBudget& b = report.budget;
  return {{"ok", report.ok()},
          {"checks", std::move(checks)},
          {"budget",
           {{"aboveZero", b.above_zero},
            {"aboveOne", b.above_one},
            {"aboveInfinity", b.above_infinity},
            {"aboveTaus", b.above_taus},
            {"total", b.total()}}}};
}

void add_report_text(CommandResult& r, const ValidationReport& report) {
  const BranchingBudget& b = report.budget;
  r.text.push_back(std::string("valid: ") + (report.ok() ? "yes" : "no"));
  r.text.push_back("branching: 0:" + std::to_string(b.above_zero) + " 1:" +
                   std::to_string(b.above_one) + " inf:" + std::to_string(b.above_infinity) +
                   " taus:" + std::to_string(b.above_taus) + " total:" + std::to_string(b.total()));
  for (Check c : report.failures()) r.diagnostics.push_back("failed check " + std::string(to_string(c)));
}

HurwitzTuple load_tuple(const std::string& path, std::istream& in) {
  const json j = parse_json_text(read_input(path, in), path);
  return labelled(path, [&] { return tuple_from_json(j); });
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out.empty() ? "-" : out;
}

int brute_max_from_env() {
  const char* raw = std::getenv("PELLAB_BRUTE_MAX");
  if (raw == nullptr || *raw == '\0') return kDefaultBruteForceMax;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 2 || value > 16) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("PELLAB_BRUTE_MAX must be an integer in 2..16, got ") + raw);
  }
  return static_cast<int>(value);
}

CommandResult error_result(std::string_view command, std::string_view code, std::string message) {
  CommandResult r;
  r.status = Status::Error;
  r.payload = {{"schema", schema("error")},
               {"command", std::string(command)},
               {"error", std::string(code)}};
  r.diagnostics.push_back(std::move(message));
  return r;
}

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Ok: return "Ok";
    case Status::Rejected: return "Rejected";
    case Status::Error: return "Error";
  }
  return "Error";
}

int exit_code(Status status) {
  switch (status) {
    case Status::Ok: return 0;
    case Status::Rejected: return 1;
    case Status::Error: return 2;
  }
  return 2;
}

CommandResult run(const std::vector<std::string>& args, std::istream& in) {
  CLI::App app{"Exact Pell-Abel solutions, power decomposition and monodromy tuples", "pellab"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_out = false;
  app.add_flag("--json", json_out, "machine-readable output");

  SolutionInput sol_in;
  std::string seed_a, out_path, f_text, tuple_path;
  std::vector<std::string> at_values, locus_values;
  unsigned m = 0;
  int n = 0, d = 0;
  bool brute = false;

  auto* verify = app.add_subcommand("verify", "check A^2 - D*B^2 == 1");
  add_solution_options(verify, sol_in);

  auto* seed = app.add_subcommand("seed", "build (A, B, D) from A");
  seed->add_option("--A", seed_a, "polynomial A")->required();
  seed->add_flag("--allow-d1", sol_in.allow_d1, "accept deg D == 2");
  seed->add_option("--out", out_path, "write the solution JSON here");

  auto* power_cmd = app.add_subcommand("power", "m-th power of a solution");
  add_solution_options(power_cmd, sol_in);
  power_cmd->add_option("--m", m, "exponent")->required()->check(CLI::Range(1U, 1000U));
  power_cmd->add_option("--out", out_path, "write the solution JSON here");

  auto* decompose = app.add_subcommand("decompose", "find rational m-th roots of a solution");
  add_solution_options(decompose, sol_in);

  auto* ramify = app.add_subcommand("ramify", "ramification of a polynomial map");
  ramify->add_option("--f", f_text, "polynomial f")->required();
  ramify->add_option("--at", at_values, "point c (repeatable)");
  ramify->add_option("--locus", locus_values, "comma-separated branch values")->delimiter(',');

  auto* zannier = app.add_subcommand("zannier", "the primitive example tuple");
  zannier->add_option("--n", n, "half the degree")->required();
  zannier->add_option("--d", d, "half of deg D")->required();
  zannier->add_option("--out", out_path, "write the tuple JSON here");

  auto* validate_cmd = app.add_subcommand("validate", "check a tuple against the cover constraints");
  validate_cmd->add_option("--tuple", tuple_path, "tuple JSON (\"-\" for stdin)")->required();

  auto* profile = app.add_subcommand("profile", "admissible m for which a tuple is a power");
  profile->add_option("--tuple", tuple_path, "tuple JSON (\"-\" for stdin)")->required();

  auto* census_cmd = app.add_subcommand("census", "count special d = 2 tuples by case");
  census_cmd->add_option("--n", n, "half the degree")->required()->check(CLI::Range(2, 64));
  census_cmd->add_flag("--brute-force", brute, "also enumerate all involutions");

  std::string command = "pellab";
  CommandResult result;
  try {
    for (const auto& a : args) {
      if (a.starts_with('-')) continue;
      if (app.get_subcommand_no_throw(a) == nullptr) {
        throw Error(ErrorCode::InvalidArgument, "unknown subcommand '" + a + "'");
      }
      break;
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    command = app.get_subcommands().front()->get_name();

    if (verify->parsed()) {
      result = with_solution("verify", sol_in, in, [](const PellSolution& sol) {
        CommandResult r;
        r.payload = solution_json(sol);
        r.payload["schema"] = schema("verify");
        r.payload["verdict"] = "solution";
        add_solution_text(r, sol);
        return r;
      });
    } else if (seed->parsed()) {
      const PellVerdict verdict = generate_from_seed(poly_arg("--A", seed_a), PellPolicy{sol_in.allow_d1});
      if (const auto* reason = std::get_if<RejectionReason>(&verdict)) {
        result = rejected("seed", *reason);
      } else {
        const auto& sol = std::get<PellSolution>(verdict);
        result.payload = solution_json(sol);
        result.payload["schema"] = schema("seed");
        result.payload["verdict"] = "solution";
        add_solution_text(result, sol);
        if (!out_path.empty()) write_output(out_path, solution_file_json(sol));
      }
    } else if (power_cmd->parsed()) {
      result = with_solution("power", sol_in, in, [&](const PellSolution& sol) {
        const PellSolution p = power_solution(sol, m);
        // The power shares D, so the relaxed policy only re-checks the identity.
        const bool reverified = std::holds_alternative<PellSolution>(
            verify_pell(p.A, p.B, p.D, PellPolicy{true}));
        CommandResult r;
        r.payload = solution_json(p);
        r.payload["schema"] = schema("power");
        r.payload["m"] = m;
        r.payload["reverified"] = reverified;
        add_solution_text(r, p);
        if (!reverified) {
          r.status = Status::Error;
          r.diagnostics.push_back("power failed re-verification");
        }
        if (!out_path.empty()) write_output(out_path, solution_file_json(p));
        return r;
      });
    } else if (decompose->parsed()) {
      result = with_solution("decompose", sol_in, in, [](const PellSolution& sol) {
        const PowerClassification c = classify_powers(sol);
        json witnesses = json::object();
        CommandResult r;
        r.text.push_back(solution_line(sol));
        r.text.push_back("admissible m: " + join(c.admissible_m));
        for (const auto& [mm, root] : c.witnesses) {
          witnesses[std::to_string(mm)] = to_string(root);
          r.text.push_back("m=" + std::to_string(mm) + " root A' = " + to_string(root));
        }
        r.text.push_back(c.primitive ? "rational-primitive" : "power");
        if (c.primitive) r.diagnostics.push_back("primitivity is certified for rational roots only");
        r.payload = {{"schema", schema("decompose")},
                     {"n", c.n},
                     {"d", sol.d},
                     {"admissibleM", c.admissible_m},
                     {"witnesses", std::move(witnesses)},
                     {"primitive", c.primitive},
                     {"certificate", c.primitive ? "rational-primitive" : "power"}};
        return r;
      });
    } else if (ramify->parsed()) {
      if (at_values.empty() && locus_values.empty()) {
        throw Error(ErrorCode::InvalidArgument, "give --at and/or --locus");
      }
      const Poly f = poly_arg("--f", f_text);
      result.payload = {{"schema", schema("ramify")}, {"f", to_string(f)}};
      json types = json::array();
      for (const auto& text : at_values) {
        const Rat c = labelled("--at", [&] { return parse_rational(text); });
        json type = json::object();
        std::string line = "over " + to_short_string(c) + ":";
        for (const auto& [index, count] : ramification_type(f, c)) {
          type[std::to_string(index)] = count;
          line += " " + std::to_string(index) + "^" + std::to_string(count);
        }
        types.push_back({{"at", to_short_string(c)}, {"type", std::move(type)}});
        result.text.push_back(line);
      }
      result.payload["ramification"] = std::move(types);
      if (!locus_values.empty()) {
        std::vector<Rat> locus;
        json shown = json::array();
        for (const auto& text : locus_values) {
          locus.push_back(labelled("--locus", [&] { return parse_rational(text); }));
          shown.push_back(to_short_string(locus.back()));
        }
        const bool contained = verify_branch_locus_in(f, locus);
        result.payload["locus"] = std::move(shown);
        result.payload["branchLocusContained"] = contained;
        result.text.push_back(std::string("critical values inside locus: ") + (contained ? "yes" : "no"));
        if (!contained) result.status = Status::Rejected;
      }
    } else if (zannier->parsed()) {
      const HurwitzTuple t = zannier_tuple(n, d);
      const ValidationReport report = validate(t);
      result.payload = {{"schema", schema("zannier")}, {"tuple", to_json(t)}, {"validation", report_json(report)}};
      result.text.push_back("sigma0   = " + to_string(t.sigma0));
      result.text.push_back("sigmaInf = " + to_string(t.sigma_inf));
      result.text.push_back("sigma1   = " + to_string(t.sigma1));
      for (const auto& tau : t.taus) result.text.push_back("tau      = " + to_string(tau));
      add_report_text(result, report);
      if (!report.ok()) result.status = Status::Rejected;
      if (!out_path.empty()) write_output(out_path, to_json(t));
    } else if (validate_cmd->parsed()) {
      const HurwitzTuple t = load_tuple(tuple_path, in);
      const ValidationReport report = validate(t);
      result.payload = {{"schema", schema("validate")}, {"validation", report_json(report)}};
      add_report_text(result, report);
      if (!report.ok()) result.status = Status::Rejected;
    } else if (profile->parsed()) {
      const HurwitzTuple t = load_tuple(tuple_path, in);
      const HurwitzTuple special = normalize_special(t);
      const auto prof = primitivity_profile(special);
      result.payload = {{"schema", schema("profile")},
                        {"n", t.n},
                        {"d", t.d},
                        {"admissibleM", admissible_powers(t.n, t.d)},
                        {"profile", prof},
                        {"primitive", prof.empty()},
                        {"normalized", !(special == t)}};
      result.text.push_back("admissible m: " + join(admissible_powers(t.n, t.d)));
      result.text.push_back("power for m: " + join(prof));
      result.text.push_back(prof.empty() ? "primitive" : "imprimitive");
      if (!(special == t)) result.diagnostics.push_back("tuple was conjugated into special form");
    } else if (census_cmd->parsed()) {
      const int brute_max = brute_max_from_env();
      if (brute && n > brute_max) {
        throw Error(ErrorCode::TooLarge, "brute force is limited to n <= " + std::to_string(brute_max) +
                                             " (set PELLAB_BRUTE_MAX to raise it)");
      }
      const CensusReport report = census(n, CensusOptions{brute, brute_max, 0});
      result.payload = to_json(report);
      result.text.push_back("n=" + std::to_string(n) + " C1=" + std::to_string(report.c1) +
                            " C2=" + std::to_string(report.c2));
      for (ShapeCase c : kShapeCases) {
        const CaseReport& cr = report.of(c);
        std::string line = std::string(to_string(c)) + ": shape " + std::to_string(cr.shape_classes);
        if (cr.brute_classes) line += ", brute " + std::to_string(*cr.brute_classes);
        line += ", formula " + std::to_string(cr.formula_classes);
        result.text.push_back(line);
      }
      result.text.push_back("primitive Disjoint classes: " + std::to_string(report.primitive_disjoint));
      for (const auto& disc : report.discrepancies) {
        result.diagnostics.push_back("discrepancy " + std::string(to_string(disc.kind)) + ": " + disc.what +
                                     " (" + disc.left_name + "=" + std::to_string(disc.left) + ", " +
                                     disc.right_name + "=" + std::to_string(disc.right) + ")");
      }
      if (report.shape_brute_mismatch()) result.status = Status::Rejected;
    }
  } catch (const CLI::CallForHelp&) {
    result = CommandResult{};
    const auto subs = app.get_subcommands();
    result.payload = {{"schema", schema("help")}};
    result.text.push_back(subs.empty() ? app.help() : subs.front()->help());
  } catch (const CLI::ParseError& e) {
    result = error_result(command, "Usage", e.what());
  } catch (const Error& e) {
    result = error_result(command, to_string(e.code()), std::string(to_string(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    result = error_result(command, "Internal", e.what());
  }
  result.json = json_out;
  return result;
}

std::string render_json(const CommandResult& result) {
  json out = result.payload.is_object() ? result.payload : json::object();
  out["status"] = std::string(to_string(result.status));
  out["diagnostics"] = result.diagnostics;
  return out.dump() + "\n";
}

std::string render_text(const CommandResult& result) {
  std::string out;
  for (const auto& line : result.text) out += line + (line.ends_with('\n') ? "" : "\n");
  const char* prefix = result.status == Status::Error ? "error: " : "note: ";
  for (const auto& line : result.diagnostics) out += prefix + line + "\n";
  return out;
}

}  // namespace pellab::cli
