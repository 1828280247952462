#include "qreider/report.hpp"

#include "qreider/cone_oracle.hpp"
#include "qreider/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>

namespace qreider {

const char* to_string(QueryStatus s) {
  switch (s) {
    case QueryStatus::established: return "established";
    case QueryStatus::not_established: return "not-established";
    case QueryStatus::value: return "value";
    case QueryStatus::error: return "error";
  }
  return "error";
}

bool RunReport::any_error() const {
  return std::any_of(queries.begin(), queries.end(), [](const QueryReport& q) { return q.status == QueryStatus::error; });
}

std::string query_text(const Query& q) {
  Document d;
  d.queries.push_back(q);
  std::string text = print_document(d);
  // drop the "[queries]\n" header and trailing newline
  text = text.substr(text.find('\n') + 1);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

namespace {

SearchOptions search_options(const RunOptions& o, unsigned depth) {
  SearchOptions s;
  s.depth = depth;
  s.execution = o.execution;
  return s;
}

void expect_args(const Query& q, std::size_t lo, std::size_t hi, const char* usage) {
  if (q.args.size() < lo || q.args.size() > hi)
    throw DomainError(q.command + " expects " + usage + ", got " + std::to_string(q.args.size()) + " argument(s)");
}

unsigned option_uint(const Query& q, const std::string& key, unsigned fallback) {
  const auto v = q.option(key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    const long x = std::stol(*v, &used);
    if (used != v->size() || x < 0 || x > std::numeric_limits<int>::max()) throw std::invalid_argument("range");
    return static_cast<unsigned>(x);
  } catch (const std::exception&) {
    throw DomainError("option " + key + " needs a non-negative integer, got '" + *v + "'");
  }
}

void reject_unknown_options(const Query& q, std::initializer_list<const char*> known) {
  for (const auto& [k, v] : q.options) {
    if (std::none_of(known.begin(), known.end(), [&](const char* s) { return k == s; }))
      throw DomainError("unknown option '" + k + "' for " + q.command);
  }
}

const ConeDescription& cone_of(const Workspace& ws) {
  if (!ws.cone) throw DomainError("document declares no [cone]");
  return *ws.cone;
}

std::vector<Rational> constant_tuple(const std::vector<ParamExpr>& exprs) {
  std::vector<Rational> out;
  for (const auto& e : exprs) {
    if (!e.symbols().empty()) throw DomainError("witness " + to_string(e) + " depends on parameters; use search");
    out.push_back(e.value());
  }
  return out;
}

void fill_from_verdict(QueryReport& r, const CriterionVerdict& v) {
  r.status = v.established() ? QueryStatus::established : QueryStatus::not_established;
  r.rule = v.rule;
  r.trace = v.trace;
  if (v.witness) r.witness = v.witness->flat();
  r.notes.insert(r.notes.end(), v.notes.begin(), v.notes.end());
}

GoalKind goal_kind(const std::string& word) {
  if (word == "free") return GoalKind::freeness;
  if (word == "separate") return GoalKind::separation;
  if (word == "tangent") return GoalKind::tangent;
  if (word == "very-ample") return GoalKind::very_ampleness;
  if (word == "very-ample-sqrt2") return GoalKind::very_ampleness_sqrt2;
  throw DomainError("unknown search goal '" + word + "' (free, separate, tangent, very-ample, very-ample-sqrt2)");
}

Goal goal_for(GoalKind kind, const std::vector<std::string>& targets) {
  Goal g;
  g.kind = kind;
  switch (kind) {
    case GoalKind::freeness:
      if (targets.size() != 1) throw DomainError("freeness needs one point");
      g.points = targets;
      break;
    case GoalKind::separation:
      if (targets.size() != 2) throw DomainError("separation needs two points");
      g.points = targets;
      break;
    case GoalKind::tangent:
      if (targets.size() != 1) throw DomainError("tangent separation needs one tangent");
      g.tangent = targets[0];
      break;
    case GoalKind::very_ampleness:
    case GoalKind::very_ampleness_sqrt2:
      if (!targets.empty()) throw DomainError("global goals take no points");
      break;
  }
  return g;
}

void check_goal_names(const Goal& g, const SurfaceModel& s) {
  for (const auto& p : g.points) s.point(p);
  if (!g.tangent.empty()) s.tangent(g.tangent);
}

void run_check(QueryReport& r, const Query& q, const Workspace& ws, const RunOptions& o) {
  reject_unknown_options(q, {});
  GoalKind kind;
  std::vector<std::string> targets;
  std::string b_name, m_name;
  if (q.command == "check-free" || q.command == "check-separate" || q.command == "check-tangent") {
    kind = q.command == "check-free" ? GoalKind::freeness
           : q.command == "check-separate" ? GoalKind::separation
                                           : GoalKind::tangent;
    const std::size_t n = kind == GoalKind::separation ? 4 : 3;
    expect_args(q, n, n, kind == GoalKind::separation ? "B M p q" : kind == GoalKind::tangent ? "B M t" : "B M p");
    b_name = q.args[0];
    m_name = q.args[1];
    targets.assign(q.args.begin() + 2, q.args.end());
  } else {
    kind = q.command == "check-very-ample" ? GoalKind::very_ampleness : GoalKind::very_ampleness_sqrt2;
    expect_args(q, 1, 2, "[B] M");
    if (q.args.size() == 2) b_name = q.args[0];
    m_name = q.args.back();
  }
  if (!ws.surface) throw DomainError("document declares no [surface]");
  const QDivisor b = b_name.empty() ? QDivisor(ws.surface) : ws.concrete(b_name);
  const QDivisor m = ws.concrete(m_name);
  if (!is_boundary(b)) throw DomainError(b_name + " = " + to_string(b) + " is not a boundary (coefficients in [0, 1))");
  Goal goal = goal_for(kind, targets);
  check_goal_names(goal, *ws.surface);
  std::optional<BetaWitness> witness;
  if (q.witness) {
    if (kind == GoalKind::very_ampleness_sqrt2) throw DomainError("check-very-ample-sqrt2 takes no witness");
    witness = witness_from_tuple(kind, constant_tuple(*q.witness));
  }
  const auto ev = evaluate_goal(b, m, cone_of(ws), goal, witness, search_options(o, o.depth));
  fill_from_verdict(r, ev.verdict);
  r.values = ev.values;
  const QDivisor rounded = round_up(m);
  if (!(rounded == b + m))
    r.notes.push_back("round-up of M is " + to_string(rounded) + ", not B + M = " + to_string(b + m));
}

std::vector<ParamDomain> params_used(const Workspace& ws, const DivisorForm& b, const DivisorForm& m,
                                     const std::optional<std::vector<ParamExpr>>& witness) {
  std::set<std::string> used;
  for (const auto* form : {&b, &m})
    for (const auto& [curve, coeff] : *form)
      for (const auto& [p, c] : coeff.coeffs) used.insert(p);
  if (witness)
    for (const auto& e : *witness)
      for (const auto& s : e.symbols()) {
        if (!ws.symbols.params.count(s)) throw UnknownNameError("undefined parameter '" + s + "' in witness");
        used.insert(s);
      }
  std::vector<ParamDomain> out;
  for (const auto& d : ws.params)
    if (used.count(d.name)) out.push_back(d);
  return out;
}

void run_search(QueryReport& r, const Query& q, const Workspace& ws, const RunOptions& o) {
  reject_unknown_options(q, {"first", "depth"});
  if (q.args.size() < 3) throw DomainError("search expects GOAL B M [targets...]");
  if (!ws.surface) throw DomainError("document declares no [surface]");
  const GoalKind kind = goal_kind(q.args[0]);
  Goal goal = goal_for(kind, {q.args.begin() + 3, q.args.end()});
  check_goal_names(goal, *ws.surface);
  goal.witness = q.witness;

  ParamFamily family;
  family.name = q.args[1] + " + " + q.args[2];
  family.surface = ws.surface;
  family.boundary = ws.divisor(q.args[1]);
  family.positive = ws.divisor(q.args[2]);
  family.params = params_used(ws, family.boundary, family.positive, goal.witness);
  family.target();  // B + M must be parameter-free and integral

  Schedule schedule;
  schedule.first_exponent = option_uint(q, "first", 1);
  schedule.depth = option_uint(q, "depth", o.depth);
  schedule.execution = o.execution;
  if (schedule.first_exponent < 1) throw DomainError("first must be >= 1");

  const SearchReport sr = search_params(family, cone_of(ws), goal, schedule, search_options(o, o.depth));
  fill_from_verdict(r, sr.verdict);
  r.status = sr.found ? QueryStatus::established : QueryStatus::not_established;
  for (const auto& d : family.params)
    if (const auto it = sr.params.find(d.name); it != sr.params.end()) r.values.push_back({d.name, it->second});
  r.values.insert(r.values.end(), sr.values.begin(), sr.values.end());
  r.values.push_back({"attempts", Rational(static_cast<long>(sr.attempts))});
  r.values.push_back({"skipped", Rational(static_cast<long>(sr.skipped))});
  r.notes.insert(r.notes.end(), sr.notes.begin(), sr.notes.end());
}

void run_plc(QueryReport& r, const Query& q, const Workspace& ws) {
  reject_unknown_options(q, {"mode", "c0", "inclusive", "tangent"});
  expect_args(q, 3, 3, "B D p");
  const QDivisor b = ws.concrete(q.args[0]);
  const QDivisor d = ws.concrete(q.args[1]);
  const LocalConfig config = make_local_config(b, d, q.args[2], q.option("tangent").value_or(""));

  PlcOptions opts;
  const std::string mode = q.option("mode").value_or("basic");
  if (mode == "basic")
    opts.mode = PlcMode::basic;
  else if (mode == "cap3")
    opts.mode = PlcMode::cap3;
  else if (mode == "prime")
    opts.mode = PlcMode::prime;
  else
    throw DomainError("unknown plc mode '" + mode + "' (basic, cap3, prime)");
  if (const auto c0 = q.option("c0")) {
    const auto it = std::find_if(config.curves.begin(), config.curves.end(),
                                 [&](const LocalCurve& c) { return c.name == *c0; });
    if (it == config.curves.end()) throw DomainError("curve '" + *c0 + "' does not pass through " + q.args[2]);
    opts.c0 = static_cast<std::size_t>(it - config.curves.begin());
  } else if (opts.mode == PlcMode::prime) {
    throw DomainError("mode=prime needs c0=<curve>");
  }
  if (const auto inc = q.option("inclusive")) {
    if (*inc != "true" && *inc != "false") throw DomainError("inclusive must be true or false");
    opts.inclusive = *inc == "true";
  }

  const PlcResult res = plc_threshold(config, opts);
  r.status = QueryStatus::value;
  r.rule = "plc/" + mode;
  r.values.push_back({"mu_p", config.mu()});
  r.values.push_back({"m_p", config.m_p()});
  r.facts.emplace_back("plc", res.plc ? "yes" : "no");
  if (!res.plc) {
    r.values.push_back({"c", res.c});
    std::string names, terms;
    for (const auto i : res.critical) names += (names.empty() ? "" : ", ") + config.curves[i].name;
    for (const auto& t : res.critical_terms) terms += (terms.empty() ? "" : ", ") + t;
    if (!names.empty()) r.facts.emplace_back("critical", names);
    if (!terms.empty()) r.facts.emplace_back("critical_terms", terms);
  }
  r.notes.insert(r.notes.end(), res.warnings.begin(), res.warnings.end());
}

void run_nef(QueryReport& r, const Query& q, const Workspace& ws) {
  reject_unknown_options(q, {});
  expect_args(q, 1, 1, "D");
  const DivisorClass d = class_of(ws.concrete(q.args[0]));
  const auto& cone = cone_of(ws);
  r.rule = "nef-test";
  std::vector<std::pair<std::string, DivisorClass>> tests;
  if (cone.is_hirzebruch()) {
    const auto& fam = cone.hirzebruch_family();
    tests = {{to_string(fam.section), fam.section}, {to_string(fam.fiber), fam.fiber}};
  } else {
    for (const auto& g : std::get<FiniteGenerators>(cone.variant()).generators) tests.emplace_back(g.name, g.cls);
  }
  bool all = true;
  for (const auto& [name, cls] : tests) {
    const Rational v = intersect(d, cls);
    const bool holds = v >= 0;
    all = all && holds;
    r.trace.push_back({q.args[0] + "." + name + " >= 0", v, Relation::ge, Rational(0), holds});
    r.values.push_back({q.args[0] + "." + name, v});
  }
  r.values.push_back({q.args[0] + "^2", self_intersection(d)});
  r.status = all ? QueryStatus::established : QueryStatus::not_established;
}

int option_int(const Query& q, const std::string& key, std::optional<int> fallback) {
  const auto v = q.option(key);
  if (!v) {
    if (!fallback) throw DomainError(q.command + " needs " + key + "=");
    return *fallback;
  }
  try {
    std::size_t used = 0;
    const int x = std::stoi(*v, &used);
    if (used != v->size()) throw std::invalid_argument("junk");
    return x;
  } catch (const std::exception&) {
    throw DomainError("option " + key + " needs an integer, got '" + *v + "'");
  }
}

std::string signed_term(const Rational& v) { return to_string(v); }

}  // namespace

QueryReport claim_query(int n, int part, std::optional<int> m, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  QueryReport r;
  r.query = "hirzebruch-claim n=" + std::to_string(n) + " part=" + std::to_string(part) +
            (m ? " m=" + std::to_string(*m) : "");
  r.rule = "hirzebruch-claim";
  try {
    Schedule schedule{2, options.depth, options.execution};
    const ClaimReport c = hirzebruch_claim(n, part, m, schedule, search_options(options, options.depth));
    r.status = c.success() ? QueryStatus::established : QueryStatus::not_established;
    r.facts = {{"H", c.h}, {"L", c.l}, {"L nef", c.l_nef ? "yes" : "no"}};
    r.values = {{"n", Rational(c.n)},  {"m", Rational(c.m)},         {"chi(H)", c.chi},
                {"chi expected", c.chi_expected}, {"H.G", c.h_dot_g}, {"H.F", c.h_dot_f},
                {"L.G", c.l_dot_g}};
    r.trace.push_back({"chi(H) = 2m - n + 2", c.chi, Relation::eq, c.chi_expected, c.chi == c.chi_expected});
    if (part == 1) {
      r.trace.push_back({"H.G = 0", c.h_dot_g, Relation::eq, Rational(0), c.h_dot_g == 0});
      r.trace.push_back({"H.F = 1", c.h_dot_f, Relation::eq, Rational(1), c.h_dot_f == 1});
    }
    if (!c.l_nef)
      r.notes.push_back("L is not nef (L.G = " + signed_term(c.l_dot_g) +
                        " < 0); the criteria apply only through a boundary decomposition");
    for (const auto& check : c.checks) {
      QueryReport sub;
      sub.query = check.label;
      fill_from_verdict(sub, check.report.verdict);
      sub.status = check.report.found ? QueryStatus::established : QueryStatus::not_established;
      sub.facts.emplace_back("family", check.family);
      for (const auto& [name, v] : check.report.params) sub.values.push_back({name, v});
      sub.values.insert(sub.values.end(), check.report.values.begin(), check.report.values.end());
      sub.values.push_back({"attempts", Rational(static_cast<long>(check.report.attempts))});
      sub.notes.insert(sub.notes.end(), check.report.notes.begin(), check.report.notes.end());
      r.checks.push_back(std::move(sub));
    }
  } catch (const std::exception& e) {
    r.status = QueryStatus::error;
    r.error = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

QueryReport run_query(const Query& q, const Workspace& ws, const RunOptions& options) {
  if (q.command == "hirzebruch-claim") {
    try {
      reject_unknown_options(q, {"n", "part", "m"});
      expect_args(q, 0, 0, "n= part= [m=]");
      if (q.witness) throw DomainError("hirzebruch-claim takes no witness");
      std::optional<int> m;
      if (q.option("m")) m = option_int(q, "m", std::nullopt);
      QueryReport r = claim_query(option_int(q, "n", std::nullopt), option_int(q, "part", 1), m, options);
      r.query = query_text(q);
      return r;
    } catch (const std::exception& e) {
      QueryReport r;
      r.query = query_text(q);
      r.status = QueryStatus::error;
      r.error = e.what();
      return r;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  QueryReport r;
  r.query = query_text(q);
  try {
    if (q.witness && q.command != "search" && q.command.rfind("check-", 0) != 0)
      throw DomainError(q.command + " takes no witness");
    if (q.command == "chi") {
      reject_unknown_options(q, {});
      expect_args(q, 1, 1, "H");
      if (!ws.surface) throw DomainError("document declares no [surface]");
      const DivisorClass h = class_of(ws.concrete(q.args[0]));
      r.status = QueryStatus::value;
      r.rule = "riemann-roch";
      r.values.push_back({"chi", riemann_roch_chi(h, ws.surface->canonical(), ws.surface->chi_structure_sheaf())});
    } else if (q.command == "nef") {
      run_nef(r, q, ws);
    } else if (q.command == "check-free" || q.command == "check-separate" || q.command == "check-tangent" ||
               q.command == "check-very-ample" || q.command == "check-very-ample-sqrt2") {
      run_check(r, q, ws, options);
    } else if (q.command == "plc-threshold") {
      run_plc(r, q, ws);
    } else if (q.command == "search") {
      run_search(r, q, ws, options);
    } else {
      throw DomainError("unknown query '" + q.command + "'");
    }
  } catch (const std::exception& e) {
    r = QueryReport{};
    r.query = query_text(q);
    r.status = QueryStatus::error;
    r.error = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

RunReport run(const Document& doc, const Workspace& ws, const RunOptions& options) {
  RunReport out;
  for (const auto& q : doc.queries) out.queries.push_back(run_query(q, ws, options));
  return out;
}

// ---------------------------------------------------------------- rendering

namespace {

using ojson = nlohmann::ordered_json;

ojson integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

ojson rational_json(const Rational& q) {
  return ojson{{"num", integer_json(numerator_of(q))},
               {"den", integer_json(denominator_of(q))},
               {"approx", static_cast<double>(q)}};
}

ojson query_json(const QueryReport& r) {
  ojson j;
  j["query"] = r.query;
  j["status"] = to_string(r.status);
  j["rule"] = r.rule;
  j["trace"] = ojson::array();
  for (const auto& t : r.trace)
    j["trace"].push_back({{"text", t.text},
                          {"lhs", rational_json(t.lhs)},
                          {"rel", to_string(t.rel)},
                          {"rhs", rational_json(t.rhs)},
                          {"holds", t.holds}});
  if (r.witness) {
    j["witness"] = ojson::array();
    for (const auto& v : *r.witness) j["witness"].push_back(rational_json(v));
  } else {
    j["witness"] = nullptr;
  }
  j["values"] = ojson::object();
  for (const auto& v : r.values) j["values"][v.name] = rational_json(v.value);
  j["facts"] = ojson::object();
  for (const auto& [k, v] : r.facts) j["facts"][k] = v;
  j["notes"] = r.notes;
  if (r.status == QueryStatus::error) j["error"] = r.error;
  j["elapsed_ms"] = r.elapsed_ms;
  if (!r.checks.empty()) {
    j["checks"] = ojson::array();
    for (const auto& c : r.checks) j["checks"].push_back(query_json(c));
  }
  return j;
}

std::string value_text(const Rational& v) {
  if (is_integer(v)) return to_string(v);
  return to_string(v) + " (approx " + to_decimal(v) + ")";
}

void query_lines(std::ostringstream& os, const QueryReport& r, const std::string& indent) {
  os << indent << "== " << r.query << "\n";
  os << indent << "status: " << to_string(r.status);
  if (!r.rule.empty()) os << "  [" << r.rule << "]";
  os << "\n";
  if (r.status == QueryStatus::error) os << indent << "error: " << r.error << "\n";
  for (const auto& t : r.trace)
    os << indent << (t.holds ? "  ok   " : "  FAIL ") << t.text << ":  " << to_string(t.lhs) << " "
       << to_string(t.rel) << " " << to_string(t.rhs) << "\n";
  if (r.witness) {
    os << indent << "witness: (";
    for (std::size_t i = 0; i < r.witness->size(); ++i) os << (i ? ", " : "") << to_string((*r.witness)[i]);
    os << ")\n";
  }
  for (const auto& [k, v] : r.facts) os << indent << k << " = " << v << "\n";
  for (const auto& v : r.values) os << indent << v.name << " = " << value_text(v.value) << "\n";
  for (const auto& n : r.notes) os << indent << "note: " << n << "\n";
  for (const auto& c : r.checks) query_lines(os, c, indent + "  ");
  if (indent.empty()) os << "time: " << to_decimal(Rational(static_cast<long>(r.elapsed_ms * 1000), 1000), 3) << " ms\n";
}

}  // namespace

std::string render_text(const RunReport& report) {
  std::ostringstream os;
  for (std::size_t i = 0; i < report.queries.size(); ++i) {
    if (i) os << "\n";
    query_lines(os, report.queries[i], "");
  }
  return os.str();
}

std::string render_json(const RunReport& report, int indent) {
  ojson j;
  j["queries"] = ojson::array();
  for (const auto& q : report.queries) j["queries"].push_back(query_json(q));
  j["ok"] = !report.any_error();
  return j.dump(indent);
}

}  // namespace qreider
