#include "cli.hpp"

#include <charconv>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string_view>

#include <CLI11.hpp>

#include "lininv/alpha_vector.hpp"
#include "lininv/errors.hpp"
#include "lininv/invariants.hpp"
#include "lininv/primes.hpp"
#include "lininv/shortening.hpp"
#include "lininv/trig.hpp"
#include "lininv/weights.hpp"

namespace lininv::cli {

namespace {

Json signs_json(const SignVector& eps) {
  Json out = Json::array();
  for (std::size_t k = 0; k < eps.length(); ++k) out.push_back(eps[k]);
  return out;
}

Json pair_json(const PairSelection& pair) { return Json::array({pair.i, pair.j}); }

std::string q_str(const mpq_class& q) { return rational_to_string(q); }

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

std::int64_t parse_integer(std::string_view token, std::string_view what) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("malformed integer '" + std::string(token) + "' in " + std::string(what));
  }
  return value;
}

std::vector<std::int64_t> parse_integer_list(std::string_view text, std::string_view what) {
  std::vector<std::int64_t> out;
  for (std::string_view token : split_commas(text)) out.push_back(parse_integer(token, what));
  return out;
}

PairSelection parse_pair(std::string_view text) {
  const auto values = parse_integer_list(text, "--pair");
  if (values.size() != 2) throw ParseError("--pair expects I,J");
  if (values[0] < 1 || values[1] < 1) throw PreconditionError("pair indices are 1-based");
  return PairSelection(static_cast<std::size_t>(values[0]), static_cast<std::size_t>(values[1]));
}

ShortenSign parse_sign(std::string_view text) {
  if (text == "+" || text == "plus") return ShortenSign::kPlus;
  if (text == "-" || text == "minus") return ShortenSign::kMinus;
  throw ParseError("--sign expects + or -");
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

struct Options {
  std::string alpha;
  std::string pair;
  std::string beta;
  std::string formula;
  std::string sign;
  std::string identity;
  std::string method = "both";
  std::string delta;
  std::string t;
  bool solutions = false;
  bool quadrature = false;
  double tolerance = 1e-8;
  double x = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t h = 0;
  std::size_t l = 0;
  std::size_t index = 0;
};

AlphaVector alpha_input(const Options& o, Json& inputs) {
  AlphaVector alpha = parse_alpha(o.alpha);
  inputs["alpha"] = alpha.to_string();
  return alpha;
}

int compute(const Options& o, Json& inputs, Json& outputs) {
  const AlphaVector alpha = alpha_input(o, inputs);
  const PairSelection pair = parse_pair(o.pair);
  inputs["pair"] = pair_json(pair);
  pair.check_within(alpha.size());
  const PairTally tally = tally_solutions(alpha, pair);
  outputs["N"] = tally.signed_count;
  outputs["count"] = tally.count;
  outputs["parity"] = tally.parity();
  if (o.solutions) {
    const SolutionSet set = enumerate_solutions(alpha, pair);
    Json coords = Json::array();
    for (std::size_t c = 1; c <= alpha.size(); ++c) {
      if (c != pair.i && c != pair.j) coords.push_back(c);
    }
    Json list = Json::array();
    for (const SignVector& eps : set.solutions) list.push_back(signs_json(eps));
    outputs["coordinates"] = coords;
    outputs["solutions"] = list;
  }
  return kOk;
}

int verify(const Options& o, Json& inputs, Json& outputs) {
  const AlphaVector alpha = alpha_input(o, inputs);
  const InvariantReport report = verify_invariance(alpha);
  Json rows = Json::array();
  for (const PairRow& row : report.rows) {
    rows.push_back({{"pair", pair_json(row.pair)}, {"count", row.count}, {"parity", row.parity}, {"N", row.signed_count}});
  }
  outputs["parity_invariant"] = report.parity_invariant;
  if (report.signed_count_invariant) outputs["N_invariant"] = *report.signed_count_invariant;
  if (report.signed_count_depends_on_max_only) {
    outputs["N_depends_on_max_only"] = *report.signed_count_depends_on_max_only;
    Json by_max = Json::object();
    for (const auto& [value, n] : report.signed_count_by_max_omitted) by_max[value.to_string()] = n;
    outputs["N_by_max_omitted"] = by_max;
  }
  outputs["count_depends_on_min_only"] = report.count_depends_on_min_only;
  Json by_min = Json::object();
  for (const auto& [value, c] : report.count_by_min_omitted) by_min[value.to_string()] = c;
  outputs["count_by_min_omitted"] = by_min;
  outputs["rows"] = rows;
  outputs["violations"] = report.violations;
  return report.ok() ? kOk : kInternalError;
}

int closed_form(const Options& o, Json& inputs, Json& outputs) {
  const AlphaVector alpha = alpha_input(o, inputs);
  const bool odd = alpha.size() % 2 == 1;
  bool agree = true;
  const std::int64_t g = closed_form_g(alpha);
  outputs["g"] = g;
  if (odd) {
    const std::int64_t n = signed_count(alpha, PairSelection(1, 2));
    agree = agree && n == g;
  } else {
    agree = agree && g == 0;
  }
  if (!o.pair.empty()) {
    const PairSelection pair = parse_pair(o.pair);
    inputs["pair"] = pair_json(pair);
    pair.check_within(alpha.size());
    const PairTally tally = tally_solutions(alpha, pair);
    const std::int64_t via = count_via_sign_sum(alpha, pair);
    outputs["count"] = tally.count;
    outputs["count_via_sign_sum"] = via;
    agree = agree && via == static_cast<std::int64_t>(tally.count);
    outputs["N"] = tally.signed_count;
    if (!odd) {
      const std::int64_t n_via = signed_count_even_via_sign_sum(alpha, pair);
      outputs["N_via_sign_sum"] = n_via;
      agree = agree && n_via == tally.signed_count;
    }
    if (o.h != 0) {
      inputs["h"] = o.h;
      outputs["extended_signed_count"] = extended_signed_count(alpha, pair, o.h);
    }
  } else if (o.h != 0) {
    throw PreconditionError("--h needs --pair");
  }
  outputs["agree"] = agree;
  return agree ? kOk : kInternalError;
}

int weights(const Options& o, Json& inputs, Json& outputs) {
  inputs["m"] = o.m;
  const ConstraintSystem system = build_constraints(o.m);
  const WeightSpace space = solve_weight_space(o.m);
  outputs["dimension"] = space.dimension;
  outputs["unknowns"] = system.unknowns;
  outputs["constraints"] = system.rows.size();
  outputs["rank"] = space.rank;
  Json basis = Json::array();
  bool basis_ok = true;
  for (const WeightFunction& f : space.basis) {
    Json table = Json::array();
    for (const mpq_class& v : f.table()) table.push_back(q_str(v));
    basis.push_back(table);
    basis_ok = basis_ok && check_condition_star(f).holds;
  }
  outputs["basis"] = basis;
  outputs["basis_satisfies_star"] = basis_ok;
  const StarCheck parity = check_condition_star(WeightFunction::parity_product(o.m));
  outputs["parity_product_satisfies_star"] = parity.holds;
  if (parity.counterexample) {
    const auto& c = *parity.counterexample;
    outputs["counterexample"] = {
        {"eps", signs_json(c.eps)}, {"pair", pair_json(c.pair)}, {"other_pair", pair_json(c.other_pair)}};
  } else {
    outputs["counterexample"] = nullptr;
  }
  return basis_ok ? kOk : kInternalError;
}

int shorten_cmd(const Options& o, Json& inputs, Json& outputs) {
  const AlphaVector alpha = alpha_input(o, inputs);
  const ShortenSign sign = parse_sign(o.sign);
  inputs["j"] = o.j;
  inputs["k"] = o.k;
  inputs["sign"] = to_string(sign);
  const ShortenedVector v = shorten(alpha, o.j, o.k, sign);
  Json comps = Json::array();
  for (const Scalar& c : v.base.components()) comps.push_back(c.to_string());
  outputs["vector"] = v.base.to_string();
  outputs["components"] = comps;
  outputs["coordinates"] = v.base.coordinate_map();
  outputs["replaced_index"] = v.replaced_index;
  outputs["replaced_position"] = v.replaced_position();
  outputs["deleted_index"] = v.deleted_index;
  outputs["sign"] = to_string(v.sign);
  return kOk;
}

int verify_shortening(const Options& o, Json& inputs, Json& outputs) {
  const AlphaVector alpha = alpha_input(o, inputs);
  inputs["identity"] = o.identity;
  inputs["i"] = o.i;
  inputs["j"] = o.j;
  auto identity_outputs = [&](const IdentityCheck& c) {
    outputs["lhs"] = c.lhs;
    outputs["rhs"] = c.rhs;
    outputs["holds"] = c.holds();
    return c.holds() ? kOk : kInternalError;
  };
  if (o.identity == "count-split") {
    inputs["k"] = o.k;
    return identity_outputs(verify_count_split(alpha, o.i, o.j, o.k));
  }
  if (o.identity == "even-signed-split") {
    inputs["k"] = o.k;
    return identity_outputs(verify_even_signed_split(alpha, o.i, o.j, o.k));
  }
  if (o.identity == "pair-count-split") {
    inputs["r"] = o.r;
    inputs["s"] = o.s;
    return identity_outputs(verify_pair_count_split(alpha, o.i, o.j, o.r, o.s));
  }
  if (o.identity == "odd-signed-split") {
    inputs["k"] = o.k;
    const OddSplitCheck c = verify_odd_signed_split(alpha, o.i, o.j, o.k);
    outputs["lhs"] = c.lhs;
    outputs["equal_components"] = c.equal_components;
    outputs["stated_rhs"] = c.stated_rhs;
    outputs["swapped_rhs"] = c.swapped_rhs;
    outputs["stated_holds"] = c.stated_holds();
    outputs["swapped_holds"] = c.swapped_holds();
    outputs["orientation"] = to_string(kResolvedOddSplitOrientation);
    outputs["holds"] = c.holds();
    return c.holds() ? kOk : kInternalError;
  }
  throw ParseError("--identity expects count-split, even-signed-split, pair-count-split or odd-signed-split");
}

int integral(const Options& o, Json& inputs, Json& outputs) {
  const std::vector<std::int64_t> beta = parse_integer_list(o.beta, "--beta");
  const Formula formula = parse_formula(o.formula);
  inputs["beta"] = beta;
  inputs["formula"] = to_string(formula);
  if (o.index != 0) inputs["pair_index"] = o.index;
  if (formula != Formula::kResult && o.index == 0) throw PreconditionError("--pair-index is required for result1 and result2");

  std::int64_t value = 0;
  switch (formula) {
    case Formula::kResult:
      value = beta.size() % 2 == 1 ? integral_N_odd(beta) : formula_value(Formula::kResult, beta);
      break;
    case Formula::kResult1: value = integral_N_even(beta, o.index); break;
    case Formula::kResult2: value = integral_count(beta, o.index); break;
  }
  outputs["value"] = value;
  outputs["prefactor"] = q_str(formula_prefactor(formula, beta.size()));
  outputs["bare_integral"] = q_str(bare_integral(formula, beta, o.index));
  if (!o.quadrature) return kOk;

  inputs["tolerance"] = o.tolerance;
  const QuadratureResult q = quadrature_check(formula, beta, o.index, o.tolerance);
  outputs["quadrature"] = {{"numeric", q.numeric}, {"exact", q_str(q.exact)}, {"agree", q.agree}};
  return q.agree ? kOk : kInternalError;
}

int approx_beta(const Options& o, Json& inputs, Json& outputs) {
  const AlphaVector alpha = alpha_input(o, inputs);
  const BetaApproximation approx = approximate_beta(alpha);
  const BetaContract contract = check_beta_contract(alpha, approx);
  outputs["beta"] = approx.beta;
  outputs["q"] = q_str(approx.q);
  outputs["bound"] = q_str(approx.bound);
  outputs["iterations"] = approx.iterations;
  outputs["contract"] = {{"closeness", contract.closeness},
                         {"ordering", contract.ordering},
                         {"sign_preservation", contract.sign_preservation}};
  return contract.ok() ? kOk : kInternalError;
}

int primes(const Options& o, Json& inputs, Json& outputs) {
  inputs["n"] = o.n;
  inputs["method"] = o.method;
  const bool direct = o.method == "direct" || o.method == "both";
  const bool moebius = o.method == "moebius" || o.method == "both";
  if (!direct && !moebius) throw ParseError("--method expects direct, moebius or both");
  const PrimeExample example = prime_alpha(o.n);
  outputs["n"] = o.n;
  outputs["primes"] = example.primes;

  if (o.pair.empty() && direct && moebius) {
    const PrimeReport report = verify_prime_example(o.n);
    const PrimePairRow& first = report.rows.front();
    outputs["pair"] = nullptr;
    outputs["N_direct"] = first.direct;
    outputs["N_moebius"] = first.moebius;
    outputs["agree"] = report.routes_agree;
    Json rows = Json::array();
    for (const PrimePairRow& row : report.rows) {
      rows.push_back({{"pair", pair_json(row.pair)}, {"N_direct", row.direct}, {"N_moebius", row.moebius}});
    }
    outputs["pairs"] = rows;
    if (report.pair_independent) outputs["pair_independent"] = *report.pair_independent;
    if (report.depends_only_on_j) outputs["depends_only_on_j"] = *report.depends_only_on_j;
    outputs["violations"] = report.violations;
    return report.ok() ? kOk : kInternalError;
  }

  const PairSelection pair = o.pair.empty() ? PairSelection(1, 2) : parse_pair(o.pair);
  pair.check_within(o.n);
  inputs["pair"] = pair_json(pair);
  outputs["pair"] = pair_json(pair);
  std::optional<std::int64_t> nd;
  std::optional<std::int64_t> nm;
  if (direct) nd = signed_count(example.alpha, pair);
  if (moebius) nm = mobius_sum(o.n, pair.i, pair.j);
  outputs["N_direct"] = nd ? Json(*nd) : Json(nullptr);
  outputs["N_moebius"] = nm ? Json(*nm) : Json(nullptr);
  if (nd && nm) {
    outputs["agree"] = *nd == *nm;
    return *nd == *nm ? kOk : kInternalError;
  }
  outputs["agree"] = nullptr;
  return kOk;
}

int wall_cross(const Options& o, Json& inputs, Json& outputs) {
  const AlphaVector alpha = alpha_input(o, inputs);
  const PairSelection pair = parse_pair(o.pair);
  inputs["l"] = o.l;
  inputs["pair"] = pair_json(pair);
  std::optional<mpq_class> delta;
  if (!o.delta.empty()) {
    delta = parse_rational(o.delta);
    inputs["delta"] = q_str(*delta);
  }
  const WallCrossing w = wall_crossing_check(alpha, o.l, pair, delta);
  Json walls = Json::array();
  for (const SignVector& r : w.wall_solutions) walls.push_back(signs_json(r));
  outputs["delta"] = q_str(w.delta);
  outputs["wall_solutions"] = walls;
  outputs["jump_N"] = w.jump_signed_count;
  outputs["jump_count"] = w.jump_count;
  outputs["predicted_N"] = w.predicted_signed_count;
  outputs["predicted_count"] = w.predicted_count;
  outputs["matches"] = w.matches();
  return w.matches() ? kOk : kInternalError;
}

int rademacher_cmd(const Options& o, Json& inputs, Json& outputs, bool have_point, bool have_identity) {
  if (have_point == have_identity) throw ParseError("rademacher expects either --i and --t, or --beta and --x");
  if (have_point) {
    const mpq_class t = parse_rational(o.t);
    inputs["i"] = o.i;
    inputs["t"] = q_str(t);
    outputs["value"] = rademacher(o.i, t);
    return kOk;
  }
  const std::vector<std::int64_t> beta = parse_integer_list(o.beta, "--beta");
  inputs["beta"] = beta;
  inputs["x"] = o.x;
  const RademacherIdentityCheck c = rademacher_product_identity_check(beta, o.x);
  outputs["lhs"] = complex_json(c.lhs);
  outputs["rhs"] = complex_json(c.rhs);
  outputs["holds"] = c.holds;
  return c.holds ? kOk : kInternalError;
}

Json make_document(const std::string& command, Json inputs, Json outputs, int exit_code) {
  Json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["outputs"] = std::move(outputs);
  doc["exit_code"] = exit_code;
  return doc;
}

CommandResult failure(const std::string& command, Json inputs, int code, const std::string& type,
                      const std::string& message, const SignVector* witness = nullptr) {
  CommandResult out;
  out.exit_code = code;
  out.document = make_document(command, std::move(inputs), Json::object(), code);
  Json error = {{"type", type}, {"message", message}};
  if (witness != nullptr) error["witness"] = signs_json(*witness);
  out.document["error"] = error;
  out.diagnostics = (command.empty() ? "lininv: " : "lininv " + command + ": ") + message;
  return out;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Invariants of the signed-sum inequality |a_i - a_j| < <eps, a_ij> < a_i + a_j.", "lininv"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  auto alpha_opt = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alpha, "Vector, e.g. 4,6,7,9,11 or log:2,log:3,log:5")->required();
  };

  auto* compute_sub = app.add_subcommand("compute", "S_ij, N_ij and parity for one pair");
  alpha_opt(compute_sub);
  compute_sub->add_option("--pair", o.pair, "I,J (1-based)")->required();
  compute_sub->add_flag("--solutions", o.solutions, "List the solution sign vectors");

  auto* verify_sub = app.add_subcommand("verify", "All pairs and the invariance laws");
  alpha_opt(verify_sub);

  auto* closed_sub = app.add_subcommand("closed-form", "Sign-sum formulas for g, #S and N");
  alpha_opt(closed_sub);
  closed_sub->add_option("--pair", o.pair, "I,J (1-based)");
  closed_sub->set_help_flag("--help", "Print this help message and exit");
  closed_sub->add_option("--h", o.h, "Index for the extended signed count");

  auto* weights_sub = app.add_subcommand("weights", "Solve the weight-function constraints");
  weights_sub->add_option("--m", o.m, "Vector length")->required();

  auto* shorten_sub = app.add_subcommand("shorten", "Replace a_j by |a_j +- a_k| and delete a_k");
  alpha_opt(shorten_sub);
  shorten_sub->add_option("--j", o.j)->required();
  shorten_sub->add_option("--k", o.k)->required();
  shorten_sub->add_option("--sign", o.sign, "+ or -")->required();

  auto* vs_sub = app.add_subcommand("verify-shortening", "Check a shortening identity");
  alpha_opt(vs_sub);
  vs_sub->add_option("--identity", o.identity, "count-split, even-signed-split, pair-count-split, odd-signed-split")
      ->required();
  vs_sub->add_option("--i", o.i)->required();
  vs_sub->add_option("--j", o.j)->required();
  vs_sub->add_option("--k", o.k);
  vs_sub->add_option("--r", o.r);
  vs_sub->add_option("--s", o.s);

  auto* integral_sub = app.add_subcommand("integral", "Exact cot-kernel integrals");
  integral_sub->add_option("--beta", o.beta, "Positive integers, comma separated")->required();
  integral_sub->add_option("--formula", o.formula, "result, result1 or result2")->required();
  integral_sub->add_option("--pair-index", o.index, "j for result1, i for result2");
  integral_sub->add_flag("--quadrature", o.quadrature, "Also integrate numerically");
  integral_sub->add_option("--tol", o.tolerance, "Quadrature tolerance");

  auto* beta_sub = app.add_subcommand("approx-beta", "Integer approximation of alpha");
  alpha_opt(beta_sub);

  auto* primes_sub = app.add_subcommand("primes", "The log-prime vector, directly and by Moebius sums");
  primes_sub->add_option("--n", o.n, "Number of primes")->required();
  primes_sub->add_option("--pair", o.pair, "I,J (1-based)");
  primes_sub->add_option("--method", o.method, "direct, moebius or both");

  auto* wall_sub = app.add_subcommand("wall-cross", "Jumps of N and #S across a wall");
  alpha_opt(wall_sub);
  wall_sub->add_option("--l", o.l, "Component to move")->required();
  wall_sub->add_option("--pair", o.pair, "I,J (1-based)")->required();
  wall_sub->add_option("--delta", o.delta, "Step, rational");

  auto* rad_sub = app.add_subcommand("rademacher", "Rademacher functions and the product identity");
  auto* i_opt = rad_sub->add_option("--i", o.i, "Function index");
  auto* t_opt = rad_sub->add_option("--t", o.t, "Point in [0,1), rational");
  auto* beta_opt = rad_sub->add_option("--beta", o.beta, "Frequencies for the identity check");
  auto* x_opt = rad_sub->add_option("--x", o.x, "Sample point for the identity check");

  std::vector<const char*> argv;
  argv.push_back("lininv");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    CommandResult out;
    out.document = make_document("help", Json::object(), {{"usage", subs.empty() ? app.help() : subs.front()->help()}}, kOk);
    return out;
  } catch (const CLI::CallForAllHelp&) {
    CommandResult out;
    out.document = make_document("help", Json::object(), {{"usage", app.help("", CLI::AppFormatMode::All)}}, kOk);
    return out;
  } catch (const CLI::ParseError& e) {
    const auto subs = app.get_subcommands();
    return failure(subs.empty() ? "" : subs.front()->get_name(), Json::object(), kParseError, "parse_error", e.what());
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const std::map<std::string, std::function<int(Json&, Json&)>> handlers = {
      {"compute", [&](Json& in, Json& out) { return compute(o, in, out); }},
      {"verify", [&](Json& in, Json& out) { return verify(o, in, out); }},
      {"closed-form", [&](Json& in, Json& out) { return closed_form(o, in, out); }},
      {"weights", [&](Json& in, Json& out) { return weights(o, in, out); }},
      {"shorten", [&](Json& in, Json& out) { return shorten_cmd(o, in, out); }},
      {"verify-shortening", [&](Json& in, Json& out) { return verify_shortening(o, in, out); }},
      {"integral", [&](Json& in, Json& out) { return integral(o, in, out); }},
      {"approx-beta", [&](Json& in, Json& out) { return approx_beta(o, in, out); }},
      {"primes", [&](Json& in, Json& out) { return primes(o, in, out); }},
      {"wall-cross", [&](Json& in, Json& out) { return wall_cross(o, in, out); }},
      {"rademacher",
       [&](Json& in, Json& out) {
         const bool point = i_opt->count() + t_opt->count() > 0;
         const bool identity = beta_opt->count() + x_opt->count() > 0;
         return rademacher_cmd(o, in, out, point, identity);
       }},
  };

  Json inputs = Json::object();
  Json outputs = Json::object();
  try {
    const int code = handlers.at(command)(inputs, outputs);
    CommandResult out;
    out.exit_code = code;
    out.document = make_document(command, std::move(inputs), std::move(outputs), code);
    if (code != kOk) out.diagnostics = "lininv " + command + ": a requested check failed";
    return out;
  } catch (const ParseError& e) {
    return failure(command, std::move(inputs), kParseError, "parse_error", e.what());
  } catch (const DegenerateError& e) {
    return failure(command, std::move(inputs), kPreconditionError, "degenerate", e.what(), &e.witness());
  } catch (const PreconditionError& e) {
    return failure(command, std::move(inputs), kPreconditionError, "precondition", e.what());
  } catch (const NumericalError& e) {
    return failure(command, std::move(inputs), kInternalError, "numerical", e.what());
  } catch (const std::exception& e) {
    return failure(command, std::move(inputs), kInternalError, "internal", e.what());
  }
}

}  // namespace lininv::cli
