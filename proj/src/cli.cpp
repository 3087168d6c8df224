// Copyright 2026 The pslin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pslin/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "pslin/certreal.hpp"
#include "pslin/dioph.hpp"
#include "pslin/disc.hpp"
#include "pslin/errors.hpp"
#include "pslin/pscore.hpp"
#include "pslin/solver.hpp"
#include "pslin/sums.hpp"

namespace pslin::cli {
namespace {

using Json = nlohmann::ordered_json;

Json big(const Integer& z) {
  if (fits_int64(z)) return to_int64(z);
  return to_string(z);
}

Json exact(const Rational& r) {
  if (r.get_den() == 1) return big(r.get_num());
  return to_string(r);
}

Json ball(const CertifiedReal& x) {
  Json j;
  j["mid"] = x.approx();
  j["lower"] = x.lower().to_double();
  j["upper"] = x.upper().to_double();
  return j;
}

Integer parse_integer(const std::string& text, const char* what) {
  Rational r = parse_rational(text);
  if (r.get_den() != 1) throw InvalidParams(std::string(what) + " must be an integer");
  return r.get_num();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

struct Outcome {
  int code = kExitOk;
  Json summary = Json::object();
};

struct Context {
  std::vector<Json> records;
  Json params = Json::object();
  PrecisionPolicy policy;
  unsigned threads = 1;

  void emit(Json record) {
    Json full;
    full["schema"] = kSchema;
    for (auto& [key, value] : record.items()) full[key] = value;
    records.push_back(std::move(full));
  }
};

Json pair_record(const SolutionPair& p) {
  Json j;
  j["record"] = "pair";
  j["x"] = big(p.x);
  j["y"] = big(p.y);
  j["n_x"] = big(p.n_x);
  j["n_y"] = big(p.n_y);
  j["provenance"] = to_string(p.provenance);
  if (p.provenance == Provenance::kConvergent) {
    j["conv_p"] = big(p.conv_p);
    j["conv_q"] = big(p.conv_q);
    j["scan_x"] = big(p.scan_x);
  }
  return j;
}

// CSV cell for a scalar JSON value; nested values are written as JSON text.
std::string csv_cell(const Json& v) {
  std::string text = v.is_string() ? v.get<std::string>() : v.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

void write_output(std::ostream& os, const std::vector<Json>& records, const Json& manifest,
                  bool csv) {
  if (!csv) {
    for (const auto& r : records) os << r.dump() << '\n';
    os << manifest.dump() << '\n';
    return;
  }
  std::vector<std::string> columns;
  for (const auto& r : records) {
    for (auto& [key, value] : r.items()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  if (!columns.empty()) {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& r : records) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) os << ',';
        if (r.contains(columns[i])) os << csv_cell(r[columns[i]]);
      }
      os << '\n';
    }
  }
  os << "# " << manifest.dump() << '\n';
}

// Reads the argv of the last manifest record in a JSON-lines or CSV output.
std::vector<std::string> manifest_argv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParams("cannot open manifest file " + path);
  std::string line, found;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) line = line.substr(2);
    if (line.find("\"manifest\"") != std::string::npos) found = line;
  }
  if (found.empty()) throw InvalidParams("no manifest record in " + path);
  Json m = Json::parse(found);
  if (!m.contains("argv")) throw InvalidParams("manifest has no argv");
  return m["argv"].get<std::vector<std::string>>();
}

// The argv of a manifest with --out, --replay and --threads removed, then
// pinned to a single thread.
std::vector<std::string> replay_args(std::vector<std::string> argv) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < argv.size(); ++i) {
    const std::string& a = argv[i];
    if (a == "--out" || a == "--threads" || a == "--replay") {
      ++i;
      continue;
    }
    if (a.rfind("--out=", 0) == 0 || a.rfind("--threads=", 0) == 0 ||
        a.rfind("--replay=", 0) == 0) {
      continue;
    }
    out.push_back(a);
  }
  out.push_back("--threads");
  out.push_back("1");
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();

  CLI::App app{"Linear equations in Piatetski-Shapiro sequences", "pslin"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  unsigned threads = 1;
  long prec_cap = kDefaultPrecisionCap;
  bool csv = false;
  std::string out_path, replay_path;
  if (const char* env = std::getenv(kPrecCapEnv)) {
    try {
      prec_cap = std::stol(env);
    } catch (const std::exception&) {
      err << "ignoring malformed " << kPrecCapEnv << '\n';
    }
  }
  app.add_option("--threads", threads, "worker threads (1 is the determinism reference)")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--prec-cap", prec_cap, "precision cap in bits")->check(CLI::Range(64L, 1L << 24));
  app.add_flag("--csv", csv, "write result records as CSV");
  app.add_option("--out", out_path, "write output to FILE instead of standard output");
  app.add_option("--replay", replay_path, "rerun the manifest stored in FILE with one thread");

  // Option storage shared by the subcommands.
  std::string alpha_text, a_text, b_text, gamma_text, xi_text, eps_text, value_text;
  std::string from_text = "1", to_text, bound_text, xmax_text, qmax_text = "1000000";
  std::string p_text, q_text, range_text, scale_text = "1", ms_text = "1,10,100";
  std::string x_text, y_text, beta_text, eta_text, v_text;
  std::size_t limit = 0, max_conv = 200, max_points = 20000;
  unsigned k_opt = 0;
  double window = 1, budget = 60;
  bool degenerate = false;

  auto* generate = app.add_subcommand("generate", "terms floor(n^alpha) for n in [from, to]");
  generate->add_option("--alpha", alpha_text)->required();
  generate->add_option("--from", from_text);
  generate->add_option("--to", to_text)->required();

  auto* member_cmd = app.add_subcommand("member", "index n with floor(n^alpha) == value");
  member_cmd->add_option("--alpha", alpha_text)->required();
  member_cmd->add_option("--value", value_text)->required();

  auto* solve = app.add_subcommand("solve", "convergent-window search for y = a x + b");
  solve->add_option("--a", a_text)->required();
  solve->add_option("--b", b_text)->required();
  solve->add_option("--alpha", alpha_text)->required();
  solve->add_option("--gamma", gamma_text);
  solve->add_option("--xi", xi_text);
  solve->add_option("--epsilon", eps_text);
  solve->add_option("--limit", limit);
  solve->add_option("--max-convergents", max_conv);
  solve->add_option("--window-multiplier", window);
  solve->add_option("--max-window-points", max_points);
  solve->add_option("--time-budget", budget, "seconds");

  auto* brute = app.add_subcommand("brute", "all pairs with x <= x-max by enumeration");
  brute->add_option("--a", a_text)->required();
  brute->add_option("--b", b_text)->required();
  brute->add_option("--alpha", alpha_text)->required();
  brute->add_option("--x-max", xmax_text)->required();

  auto* witness = app.add_subcommand("witness", "gamma-witnesses of a^(1/alpha)");
  witness->add_option("--a", a_text)->required();
  witness->add_option("--alpha", alpha_text)->required();
  witness->add_option("--gamma", gamma_text);
  witness->add_option("--q-max", qmax_text);
  witness->add_option("--x", x_text, "check a solution pair instead");
  witness->add_option("--y", y_text);
  witness->add_option("--b", b_text);
  witness->add_option("--beta", beta_text);

  auto* construct = app.add_subcommand("alpha-construct", "alpha with a^(1/alpha) == p/q");
  construct->add_option("--a", a_text)->required();
  construct->add_option("--p", p_text)->required();
  construct->add_option("--q", q_text)->required();
  construct->add_option("--range", range_text, "s,t")->required();

  auto* disc_cmd = app.add_subcommand("discrepancy", "discrepancy of frac(scale n^alpha)");
  disc_cmd->add_option("--alpha", alpha_text)->required();
  disc_cmd->add_option("--scale", scale_text);
  disc_cmd->add_option("--from", from_text);
  disc_cmd->add_option("--to", to_text)->required();
  disc_cmd->add_option("--m", ms_text, "comma separated Erdos-Turan cutoffs");

  auto* bounds = app.add_subcommand("bounds", "k, exponents and the exponential-sum bound shape");
  bounds->add_option("--alpha", alpha_text)->required();
  bounds->add_option("--gamma", gamma_text)->required();
  bounds->add_option("--xi", xi_text);
  bounds->add_option("--k", k_opt);
  bounds->add_option("--eta", eta_text);
  bounds->add_option("--V", v_text);

  auto* triples = app.add_subcommand("triples", "triples whose seven sums lie in PS(alpha)");
  triples->add_option("--alpha", alpha_text)->required();
  triples->add_option("--bound", bound_text)->required();
  triples->add_option("--limit", limit);
  triples->add_flag("--allow-degenerate", degenerate);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitInvalid;
  }

  if (!replay_path.empty()) {
    std::vector<std::string> again;
    try {
      again = replay_args(manifest_argv(replay_path));
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitInvalid;
    }
    if (!out_path.empty()) {
      again.push_back("--out");
      again.push_back(out_path);
    }
    if (csv && std::find(again.begin(), again.end(), "--csv") == again.end()) {
      again.push_back("--csv");
    }
    return run(again, out, err);
  }
  if (app.get_subcommands().empty()) {
    err << "usage error: a subcommand is required\n" << app.help();
    return kExitInvalid;
  }
  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  Context ctx;
  ctx.policy = PrecisionPolicy{kDefaultStartPrecision, prec_cap};
  ctx.threads = threads;
  Outcome outcome;
  std::string status = "ok";

  auto alpha_spec = [&]() {
    AlphaSpec alpha = AlphaSpec::parse(alpha_text);
    ctx.params["alpha"] = alpha.canonical();
    ctx.params["alpha_approx"] = alpha.approx();
    return alpha;
  };

  std::map<std::string, std::function<Outcome()>> handlers;

  handlers["generate"] = [&]() {
    AlphaSpec alpha = alpha_spec();
    Integer lo = parse_integer(from_text, "--from"), hi = parse_integer(to_text, "--to");
    ctx.params["from"] = big(lo);
    ctx.params["to"] = big(hi);
    for (const auto& t : segment(alpha, lo, hi, ctx.policy, ctx.threads)) {
      ctx.emit({{"record", "term"}, {"n", big(t.n)}, {"value", big(t.value)}});
    }
    Outcome o;
    o.summary["terms"] = ctx.records.size();
    return o;
  };

  handlers["member"] = [&]() {
    AlphaSpec alpha = alpha_spec();
    Integer value = parse_integer(value_text, "--value");
    if (value < 0) throw InvalidParams("--value must be non-negative");
    ctx.params["value"] = big(value);
    auto n = member(value, alpha, ctx.policy);
    Json r{{"record", "member"}, {"value", big(value)}, {"member", n.has_value()}};
    if (n) r["n"] = big(*n);
    ctx.emit(r);
    Outcome o;
    o.summary["member"] = n.has_value();
    return o;
  };

  handlers["solve"] = [&]() {
    AlphaSpec alpha = alpha_spec();
    Rational a = parse_rational(a_text), b = parse_rational(b_text);
    SearchParams params;
    if (!gamma_text.empty()) params.gamma = parse_rational(gamma_text).get_d();
    if (!xi_text.empty()) params.xi = parse_rational(xi_text).get_d();
    if (!eps_text.empty()) params.epsilon = parse_rational(eps_text);
    params.limit = limit;
    params.max_convergents = max_conv;
    params.window_multiplier = window;
    params.max_window_points = max_points;
    params.time_budget_seconds = budget;
    params.precision = ctx.policy;
    params.threads = ctx.threads;
    ctx.params["a"] = exact(a);
    ctx.params["b"] = exact(b);
    SolveResult result = find_solutions(a, b, alpha, params);
    ctx.params["gamma"] = result.resolved.gamma;
    ctx.params["xi"] = result.resolved.xi;
    ctx.params["epsilon"] = exact(result.resolved.epsilon);
    ctx.params["limit"] = limit;
    ctx.params["max_convergents"] = max_conv;
    ctx.params["window_multiplier"] = window;
    ctx.params["max_window_points"] = max_points;
    ctx.params["time_budget_s"] = budget;
    for (const auto& p : result.pairs) ctx.emit(pair_record(p));
    Outcome o;
    o.summary["pairs"] = result.pairs.size();
    o.summary["exhausted"] = result.exhausted;
    o.summary["stop_reason"] = result.stop_reason;
    o.summary["largest_q"] = big(result.largest_q);
    o.summary["convergents_tried"] = result.convergents_tried;
    o.summary["points"] = result.points;
    o.summary["filter_hits"] = result.filter_hits;
    o.summary["verified"] = result.verified;
    o.summary["base_u"] = big(result.base.u);
    o.summary["base_v"] = big(result.base.v);
    o.summary["interval"] = {exact(result.interval.lo), exact(result.interval.hi)};
    if (result.pairs.empty() && result.exhausted) o.code = kExitBudget;
    return o;
  };

  handlers["brute"] = [&]() {
    AlphaSpec alpha = alpha_spec();
    Rational a = parse_rational(a_text), b = parse_rational(b_text);
    Integer x_max = parse_integer(xmax_text, "--x-max");
    ctx.params["a"] = exact(a);
    ctx.params["b"] = exact(b);
    ctx.params["x_max"] = big(x_max);
    auto pairs = brute_force_solutions(a, b, alpha, x_max, ctx.policy, 50'000'000, ctx.threads);
    for (const auto& p : pairs) ctx.emit(pair_record(p));
    Outcome o;
    o.summary["pairs"] = pairs.size();
    return o;
  };

  handlers["witness"] = [&]() {
    AlphaSpec alpha = alpha_spec();
    Rational a = parse_rational(a_text);
    ctx.params["a"] = exact(a);
    Outcome o;
    if (!x_text.empty()) {
      if (y_text.empty() || beta_text.empty()) throw InvalidParams("--x needs --y and --beta");
      Rational b = b_text.empty() ? Rational(0) : parse_rational(b_text);
      Rational beta = parse_rational(beta_text);
      Integer x = parse_integer(x_text, "--x"), y = parse_integer(y_text, "--y");
      ctx.params["b"] = exact(b);
      ctx.params["beta"] = exact(beta);
      ctx.params["x"] = big(x);
      ctx.params["y"] = big(y);
      WitnessCheck w = solution_to_witness(x, y, normalize(a, b), alpha, beta, ctx.policy);
      ctx.emit({{"record", "witness_check"},
                {"p", big(w.p)},
                {"q", big(w.q)},
                {"holds", w.holds},
                {"exact", w.exact},
                {"error", ball(w.error)}});
      o.summary["holds"] = w.holds;
      return o;
    }
    if (gamma_text.empty()) throw InvalidParams("--gamma is required");
    WitnessQuery query{a, alpha, parse_rational(gamma_text), parse_integer(qmax_text, "--q-max")};
    ctx.params["gamma"] = exact(query.gamma);
    ctx.params["q_max"] = big(query.q_max);
    auto found = gamma_witnesses(query, ctx.policy);
    for (const auto& w : found) {
      ctx.emit({{"record", "witness"},
                {"p", big(w.p)},
                {"q", big(w.q)},
                {"exact", w.exact},
                {"error", ball(w.error)}});
    }
    o.summary["witnesses"] = found.size();
    return o;
  };

  handlers["alpha-construct"] = [&]() {
    Rational a = parse_rational(a_text);
    Integer p = parse_integer(p_text, "--p"), q = parse_integer(q_text, "--q");
    auto ends = split(range_text, ',');
    if (ends.size() != 2) throw InvalidParams("--range expects s,t");
    Rational s = parse_rational(ends[0]), t = parse_rational(ends[1]);
    ctx.params["a"] = exact(a);
    ctx.params["p"] = big(p);
    ctx.params["q"] = big(q);
    ctx.params["range"] = {exact(s), exact(t)};
    ConstructedAlpha c = construct_solvable_alpha(a, p, q, s, t);
    Json r{{"record", "alpha"}, {"in_range", c.alpha.has_value()}};
    if (c.alpha) {
      r["alpha"] = c.alpha->approx();
      r["form"] = c.alpha->canonical();
      r["enclosure"] = ball(c.alpha->enclosure(128));
    } else {
      r["reason"] = c.reason;
    }
    ctx.emit(r);
    Outcome o;
    o.summary["in_range"] = c.alpha.has_value();
    return o;
  };

  handlers["discrepancy"] = [&]() {
    AlphaSpec alpha = alpha_spec();
    Rational scale = parse_rational(scale_text);
    Integer lo = parse_integer(from_text, "--from"), hi = parse_integer(to_text, "--to");
    std::vector<unsigned long> ms;
    for (const auto& m : split(ms_text, ',')) ms.push_back(parse_integer(m, "--m").get_ui());
    ctx.params["scale"] = exact(scale);
    ctx.params["from"] = big(lo);
    ctx.params["to"] = big(hi);
    ctx.params["m"] = ms;
    auto points = scaled_power_fracs(scale, alpha, lo, hi, ctx.policy, ctx.threads);
    DiscrepancyReport rep = discrepancy_report(points, ms, ctx.threads);
    Json et = Json::array();
    for (const auto& [m, v] : rep.et_bounds) et.push_back({{"m", m}, {"bound", v}});
    ctx.emit({{"record", "discrepancy"},
              {"n_points", rep.n_points},
              {"d", ball(rep.exact_d)},
              {"erdos_turan", et},
              {"notes", rep.notes}});
    Outcome o;
    o.summary["n_points"] = rep.n_points;
    return o;
  };

  handlers["bounds"] = [&]() {
    Rational alpha_q = parse_rational(alpha_text), gamma_q = parse_rational(gamma_text);
    double alpha = alpha_q.get_d(), gamma = gamma_q.get_d();
    ctx.params["alpha"] = exact(alpha_q);
    ctx.params["gamma"] = exact(gamma_q);
    unsigned k = k_opt ? k_opt : choose_k(alpha_q, gamma_q);
    double xi = xi_text.empty() ? 0.01 * (gamma - alpha) : parse_rational(xi_text).get_d();
    ctx.params["k"] = k;
    ctx.params["xi"] = xi;
    BoundExponents ex = compute_exponents(alpha, gamma, xi, k);
    Json r{{"record", "bounds"},
           {"k", k},
           {"bracket_holds", k_bracket_holds(alpha_q, gamma_q, k)},
           {"psi1", ex.psi1},
           {"psi2", ex.psi2},
           {"psi", ex.psi},
           {"negative", ex.negative},
           {"xi_threshold", xi_threshold(alpha, gamma, k)}};
    if (!eta_text.empty() && !v_text.empty()) {
      double eta = parse_rational(eta_text).get_d(), V = parse_rational(v_text).get_d();
      ctx.params["eta"] = eta;
      ctx.params["V"] = V;
      ExpSumBound lb = exp_sum_bound(eta, V, alpha, k);
      r["exp_sum_bound"] = {{"value", lb.value},
                          {"first_term", lb.first_term},
                          {"second_term", lb.second_term},
                          {"m", lb.m},
                          {"shape_only", lb.shape_only}};
    }
    ctx.emit(r);
    Outcome o;
    o.summary["psi_negative"] = ex.negative;
    return o;
  };

  handlers["triples"] = [&]() {
    AlphaSpec alpha = alpha_spec();
    Integer bound = parse_integer(bound_text, "--bound");
    TripleOptions opts;
    opts.allow_degenerate = degenerate;
    opts.limit = limit;
    opts.threads = ctx.threads;
    opts.precision = ctx.policy;
    ctx.params["bound"] = big(bound);
    ctx.params["limit"] = limit;
    ctx.params["allow_degenerate"] = degenerate;
    auto found = find_triples(alpha, bound, opts);
    for (const auto& t : found) {
      Json w = Json::array();
      for (const auto& n : t.witnesses) w.push_back(big(n));
      ctx.emit({{"record", "triple"},
                {"k", big(t.k)},
                {"l", big(t.l)},
                {"m", big(t.m)},
                {"witnesses", w},
                {"degenerate", t.degenerate}});
    }
    Outcome o;
    o.summary["triples"] = found.size();
    return o;
  };

  try {
    outcome = handlers.at(name)();
    if (outcome.code == kExitBudget) status = "budget_exhausted";
  } catch (const PrecisionOverflow& e) {
    outcome.code = kExitPrecision;
    status = "precision_overflow";
    outcome.summary["message"] = e.what();
    outcome.summary["precision_cap"] = e.precision_cap();
    outcome.summary["index"] = e.index();
  } catch (const BudgetExceeded& e) {
    outcome.code = kExitBudget;
    status = "budget_exhausted";
    outcome.summary["message"] = e.what();
  } catch (const Error& e) {
    outcome.code = kExitInvalid;
    status = "invalid_params";
    outcome.summary["message"] = e.what();
  }
  if (outcome.code != kExitOk && outcome.summary.contains("message")) {
    err << "error: " << outcome.summary["message"].get<std::string>() << '\n';
  }

  Json manifest;
  manifest["schema"] = kSchema;
  manifest["record"] = "manifest";
  manifest["subcommand"] = name;
  manifest["argv"] = args;
  manifest["params"] = ctx.params;
  manifest["threads"] = threads;
  manifest["prec_cap"] = prec_cap;
  manifest["version"] = kVersion;
  manifest["wall_time_s"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  manifest["outcome"] = {{"status", status}, {"exit_code", outcome.code}};
  for (auto& [key, value] : outcome.summary.items()) manifest["outcome"][key] = value;

  if (out_path.empty()) {
    write_output(out, ctx.records, manifest, csv);
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write " << out_path << '\n';
      return kExitInvalid;
    }
    write_output(file, ctx.records, manifest, csv);
  }
  return outcome.code;
}

}  // namespace pslin::cli
