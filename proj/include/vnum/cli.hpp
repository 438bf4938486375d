#ifndef VNUM_CLI_HPP
#define VNUM_CLI_HPP

// Command implementations behind tools/vnum. Each command returns an exit
// code: 0 ok, 1 verification failed, 2 parse error, 3 resource cap,
// 4 disagreement between a proven formula or bound and the oracle.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "vnum/constructions.hpp"
#include "vnum/error.hpp"
#include "vnum/formulas.hpp"
#include "vnum/graph.hpp"
#include "vnum/io.hpp"
#include "vnum/regularity.hpp"
#include "vnum/vnum.hpp"

namespace vnum::cli {

enum Exit : int { kOk = 0, kFailed = 1, kParse = 2, kResource = 3, kDisagreement = 4 };

// ---------------------------------------------------------------------------
// Inputs

struct GraphInput {
  Graph graph;
  std::optional<BuiltGraph> built;  // set when the graph came from --family
  std::string source;
};

/// Flags shared by every command that takes a graph.
struct GraphFlags {
  std::string family;
  int n = 0, k = 0, r = 0, m = 0;
  std::vector<int> sizes;
  std::vector<int> whiskers;
  std::string graph_file;
  std::string g6;

  void attach(CLI::App* app) {
    app->add_option("--family", family, "path | cycle | complete | star | binary-tree | clique-path | gkr | hkm | whiskered-complete");
    app->add_option("--n", n, "order, leaves (star), level (binary-tree) or clique size m (whiskered-complete)");
    app->add_option("--k", k, "k for gkr and hkm");
    app->add_option("--r", r, "r for gkr");
    app->add_option("--m", m, "m for hkm");
    app->add_option("--sizes", sizes, "clique sizes for clique-path")->delimiter(',');
    app->add_option("--whiskers", whiskers, "whisker counts per vertex for whiskered-complete")->delimiter(',');
    app->add_option("--graph", graph_file, "graph file (JSON or graph6)");
    app->add_option("--g6", g6, "graph6 string");
  }

  FamilySpec spec() const {
    const Family f = parse_family(family);
    switch (f) {
      case Family::clique_path: return FamilySpec::clique_path(sizes);
      case Family::gkr: return FamilySpec::gkr(k, r);
      case Family::hkm: return FamilySpec::hkm(k, m);
      case Family::whiskered_complete: return FamilySpec::whiskered_complete(n, whiskers);
      default: return {f, n, 0, 0, 0, {}};
    }
  }

  GraphInput load() const {
    const int given = (family.empty() ? 0 : 1) + (graph_file.empty() ? 0 : 1) + (g6.empty() ? 0 : 1);
    if (given != 1) throw ParseError("give exactly one of --family, --graph, --g6");
    GraphInput in;
    if (!family.empty()) {
      try {
        in.built = build(spec());
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
      }
      in.graph = in.built->graph;
      in.source = in.built->spec.describe();
    } else if (!graph_file.empty()) {
      in.graph = read_graph_file(graph_file);
      in.source = graph_file;
    } else {
      in.graph = from_graph6(g6);
      in.source = "graph6:" + g6;
    }
    return in;
  }
};

inline void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

/// Runs f(i) for i in [0, count) on a few threads; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, const std::function<T(std::size_t)>& f) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::size_t next = 0;
  std::mutex mu;
  auto worker = [&] {
    while (true) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= count) return;
        i = next++;
      }
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// ---------------------------------------------------------------------------
// Formulas and witnesses applicable to a graph

struct FormulaEntry {
  std::optional<VertexSet> cut_set;  // unset: global value
  FormulaValue value;
};

/// Every formula, bound and conjecture that applies to the input.
inline std::vector<FormulaEntry> applicable_formulas(const GraphInput& in) {
  std::vector<FormulaEntry> out;
  const Graph& g = in.graph;
  if (is_complete(g)) out.push_back({std::nullopt, {0, "complete graph: v = 0", false, true}});
  else if (is_cone(g)) out.push_back({std::nullopt, {1, "non-complete cone: v = 1", false, true}});
  if (auto cps = cm_closed_structure(g); cps && !is_complete(g)) {
    const auto global = v_cm_closed(*cps);
    out.push_back({std::nullopt, global.value});
    for (const CutSet& c : enumerate_cut_sets(g)) out.push_back({c.vertices, v_cm_closed_local(g, *cps, c.vertices)});
    out.push_back({VertexSet{0}, {size_of(cps->tilde_c), "cm-closed: v_empty = number of cut vertices", false, true}});
  }
  if (!in.built) return out;
  const FamilySpec& s = in.built->spec;
  switch (s.family) {
    case Family::path:
      if (s.n >= 2) out.push_back({std::nullopt, v_path(s.n)});
      break;
    case Family::cycle: {
      out.push_back({std::nullopt, cycle_bounds(s.n).value});
      if (s.n >= 4) {
        for (const CutSet& c : enumerate_cut_sets(g)) {
          if (c.vertices == 0) continue;
          FormulaValue f = cycle_bound(s.n, c.vertices);
          if (s.n <= 5) {
            f.value = s.n - 2;
            f.exact = true;
            f.anchor = s.n == 4 ? "cycle: v_S(C_4) = 2" : "cycle: v_S(C_5) = 3";
          }
          out.push_back({c.vertices, f});
        }
      }
      if (s.n >= 6) out.push_back({std::nullopt, conjecture_value(Family::cycle, s.n)});
      break;
    }
    case Family::binary_tree:
      out.push_back({std::nullopt, binary_tree_bound(s.n)});
      if (s.n >= 3) out.push_back({std::nullopt, conjecture_value(Family::binary_tree, s.n)});
      break;
    case Family::gkr:
      out.push_back({std::nullopt, {s.k, "G(k,r): v = k", false, true}});
      out.push_back({bit(in.built->names.at("v")), {s.k, "G(k,r): v_{v} <= k", false, false}});
      break;
    default: break;
  }
  return out;
}

/// Explicit witness constructions that apply to the input, one per cut set at most.
inline std::vector<Witness> applicable_witnesses(const GraphInput& in, const Limits& lim = default_limits()) {
  std::vector<Witness> out;
  const Graph& g = in.graph;
  out.push_back(witness_empty(g, lim));
  if (auto cps = cm_closed_structure(g); cps && !is_complete(g)) {
    for (const CutSet& c : enumerate_cut_sets(g, lim)) {
      if (c.vertices != 0) out.push_back(witness_cm_closed(g, *cps, c.vertices));
    }
    return out;
  }
  if (!in.built) return out;
  const FamilySpec& s = in.built->spec;
  switch (s.family) {
    case Family::cycle:
      for (const CutSet& c : enumerate_cut_sets(g, lim)) {
        if (c.vertices == 0) continue;
        if (s.n == 4) out.push_back(witness_c4(c.vertices));
        else if (s.n == 5) out.push_back(witness_c5(c.vertices));
        else out.push_back(witness_cycle(s.n, c.vertices));
      }
      break;
    case Family::binary_tree:
      if (s.n >= 1) {
        Witness w = witness_binary_tree(s.n);
        if (w.cut_set != 0) out.push_back(std::move(w));
      }
      break;
    case Family::gkr: out.push_back(witness_gkr(s.k, s.r)); break;
    default: break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// compute

struct ComputeOptions {
  std::string ideal = "binomial";
  std::string method = "all";
  std::optional<int> d_max;
  std::string field = "fp:32003";
  bool all_locals = true;
  bool timings = true;
};

struct ComputeResult {
  Json report;
  int exit_code = kOk;
};

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline VReport run_oracle(const Graph& g, const ComputeOptions& o, bool exact, const Limits& lim) {
  OracleOptions opts;
  opts.d_max = o.d_max;
  opts.all_locals = o.all_locals;
  opts.exact_search = exact || o.field == "qq";
  if (opts.exact_search) return v_oracle<Rational>(g, opts, lim);
  return with_field(o.field, [&](auto k) { return v_oracle<decltype(k)>(g, opts, lim); });
}

/// Problems found when comparing oracle values with formulas and witnesses.
inline std::vector<std::string> cross_check(const VReport& r, const std::vector<FormulaEntry>& formulas,
                                            const std::vector<Json>& witnesses, std::optional<bool> v2) {
  std::vector<std::string> problems;
  auto local = [&](VertexSet s) -> const LocalEntry* {
    for (const auto& e : r.locals)
      if (e.cut_set == s) return &e;
    return nullptr;
  };
  for (const auto& f : formulas) {
    if (f.value.conjecture) continue;
    std::optional<int> oracle;
    int lower = 0;
    if (!f.cut_set) {
      oracle = r.global;
    } else if (const LocalEntry* e = local(*f.cut_set)) {
      oracle = e->value;
      lower = e->lower_bound;
    }
    const std::string where = f.cut_set ? " at " + format_set(*f.cut_set) : "";
    if (oracle) {
      if (f.value.exact && *oracle != f.value.value)
        problems.push_back(f.value.anchor + where + ": formula " + std::to_string(f.value.value) + ", oracle " + std::to_string(*oracle));
      if (!f.value.exact && *oracle > f.value.value)
        problems.push_back(f.value.anchor + where + ": oracle " + std::to_string(*oracle) + " exceeds the bound");
    } else if (f.cut_set && lower > f.value.value) {
      problems.push_back(f.value.anchor + where + ": oracle lower bound " + std::to_string(lower) + " exceeds the formula");
    }
  }
  for (const Json& w : witnesses) {
    if (!w.at("accepted").get<bool>()) {
      problems.push_back("witness '" + w.at("construction").get<std::string>() + "' rejected: " + w.at("reason").get<std::string>());
      continue;
    }
    VertexSet s = 0;
    for (int v : w.at("cutset")) s |= bit(v);
    if (const LocalEntry* e = local(s); e && e->value && w.at("degree").get<int>() < *e->value)
      problems.push_back("witness of degree " + std::to_string(w.at("degree").get<int>()) + " at " + format_set(s) +
                         " undercuts the oracle value " + std::to_string(*e->value));
  }
  if (v2 && r.global && *v2 != (*r.global == 2))
    problems.push_back(std::string("v = 2 characterization: predicate ") + (*v2 ? "true" : "false") + ", oracle v = " +
                       std::to_string(*r.global));
  return problems;
}

inline Json formula_to_json(const FormulaEntry& f) {
  Json j = {{"value", f.value.value}, {"anchor", f.value.anchor}, {"exact", f.value.exact}, {"conjecture", f.value.conjecture}};
  j["cutset"] = f.cut_set ? vertex_list(*f.cut_set) : Json(nullptr);
  return j;
}

inline ComputeResult compute_binomial(const GraphInput& in, const ComputeOptions& o, const Limits& lim) {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph& g = in.graph;
  if (!is_connected(g)) throw InvalidArgument("v-number computations expect a connected graph");
  const bool do_oracle = o.method == "oracle" || o.method == "all";
  const bool do_formula = o.method == "formula" || o.method == "all";
  const bool do_witness = o.method == "witness" || o.method == "all";
  ComputeResult out;
  Json& rep = out.report;
  rep["schema"] = kReportSchema;
  rep["input"] = {{"source", in.source}, {"graph", graph_to_json(g)}, {"labelling_closed", is_closed_labelling(g)}};
  rep["ideal"] = "binomial";
  rep["method"] = o.method;
  Json timings;

  std::vector<FormulaEntry> formulas;
  std::optional<bool> v2;
  if (do_formula) {
    const auto t = std::chrono::steady_clock::now();
    formulas = applicable_formulas(in);
    Json fs = Json::array();
    for (const auto& f : formulas) fs.push_back(formula_to_json(f));
    rep["formulas"] = fs;
    const V2Result p = is_v2(g);
    v2 = p.value;
    rep["v2_predicate"] = {{"value", p.value}, {"case", p.case_tag}, {"u", p.u}, {"v", p.v}};
    timings["formulas"] = seconds_since(t);
  }
  std::vector<Json> witnesses;
  if (do_witness) {
    const auto t = std::chrono::steady_clock::now();
    for (Witness& w : applicable_witnesses(in, lim)) {
      witnesses.push_back(certificate_to_json(make_certificate(g, w.cut_set, std::move(w.f), w.construction, lim)));
    }
    rep["witnesses"] = witnesses;
    timings["witnesses"] = seconds_since(t);
  }
  std::optional<int> value;
  if (do_oracle) {
    const auto t = std::chrono::steady_clock::now();
    VReport r = run_oracle(g, o, false, lim);
    auto problems = cross_check(r, formulas, witnesses, v2);
    if (!problems.empty() && o.field != "qq") {
      // a miss over GF(p) could only raise oracle values; settle it over Q
      r = run_oracle(g, o, true, lim);
      r.notes.push_back("re-run over the rationals after a disagreement over " + o.field);
      problems = cross_check(r, formulas, witnesses, v2);
    }
    rep["oracle"] = report_to_json(r);
    rep["disagreements"] = problems;
    if (!problems.empty()) out.exit_code = kDisagreement;
    if (!r.caps_hit.empty() && out.exit_code == kOk && !r.global) out.exit_code = kResource;
    value = r.global;
    timings["oracle"] = seconds_since(t);
  } else {
    std::vector<std::string> problems;
    for (const Json& w : witnesses)
      if (!w.at("accepted").get<bool>()) problems.push_back("witness '" + w.at("construction").get<std::string>() + "' rejected");
    rep["disagreements"] = problems;
    if (!problems.empty()) out.exit_code = kDisagreement;
    for (const auto& f : formulas)
      if (!f.cut_set && f.value.exact && !f.value.conjecture) value = f.value.value;
  }
  if (do_witness) {
    std::optional<int> best;
    for (const Json& w : witnesses)
      if (w.at("accepted").get<bool>()) best = std::min(best.value_or(1 << 30), w.at("degree").get<int>());
    rep["witness_upper_bound"] = best ? Json(*best) : Json(nullptr);
    if (!value && o.method == "witness") rep["note"] = "witness-only run: v is at most witness_upper_bound";
  }
  rep["v"] = value ? Json(*value) : Json(nullptr);
  timings["total"] = seconds_since(t0);
  if (o.timings) rep["timings"] = timings;
  return out;
}

inline ComputeResult compute_monomial(const GraphInput& in, const ComputeOptions& o, const Limits& lim) {
  const auto t0 = std::chrono::steady_clock::now();
  ComputeResult out;
  Json& rep = out.report;
  rep["schema"] = kReportSchema;
  rep["input"] = {{"source", in.source}, {"graph", graph_to_json(in.graph)}};
  rep["ideal"] = "monomial";
  rep["method"] = o.method;
  const MonomialVResult r = v_monomial(in.graph, lim);
  rep["v"] = r.value;
  rep["witness_set"] = vertex_list(r.witness);
  rep["colon_route"] = r.colon_route ? Json(*r.colon_route) : Json(nullptr);
  std::vector<std::string> problems;
  if (in.built && in.built->spec.family == Family::hkm) {
    const FormulaValue f{in.built->spec.k, "H(k,m): v(I(G)) = k", false, true};
    rep["formulas"] = Json::array({formula_to_json({std::nullopt, f})});
    if (f.value != r.value) problems.push_back(f.anchor + ": formula " + std::to_string(f.value) + ", oracle " + std::to_string(r.value));
  }
  rep["disagreements"] = problems;
  if (!problems.empty()) out.exit_code = kDisagreement;
  if (o.timings) rep["timings"] = {{"total", seconds_since(t0)}};
  return out;
}

inline ComputeResult compute(const GraphInput& in, const ComputeOptions& o, const Limits& lim = default_limits()) {
  if (o.method != "oracle" && o.method != "formula" && o.method != "witness" && o.method != "all")
    throw ParseError("unknown method '" + o.method + "'");
  with_field(o.field, [](auto) { return 0; });
  if (o.ideal == "binomial") return compute_binomial(in, o, lim);
  if (o.ideal == "monomial") return compute_monomial(in, o, lim);
  throw ParseError("unknown ideal '" + o.ideal + "'");
}

// ---------------------------------------------------------------------------
// scan

struct ScanRow {
  std::string instance;
  std::string oracle;   // value or "-" when not computed
  std::string formula;  // proven value or bound
  std::string conjecture;
  std::string status;   // ok | gap | VIOLATION | CONJECTURE-MISMATCH | capped
  Json detail;
};

inline std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParseError("bad range '" + text + "' (use a or a..b)");
  }
}

/// All clique-size tuples with t <= max_t cliques of size >= 2 and at most max_vertices vertices in total.
inline std::vector<std::vector<int>> clique_path_tuples(int max_t, int max_vertices) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int used) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_t) return;
    for (int s = 2; used + s - (cur.empty() ? 0 : 1) <= max_vertices; ++s) {
      cur.push_back(s);
      rec(used + s - (cur.size() == 1 ? 0 : 1));
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline ScanRow scan_instance(const GraphInput& in, const Limits& lim) {
  ScanRow row;
  row.instance = in.source;
  ComputeOptions o;
  o.timings = false;
  ComputeResult c;
  try {
    c = compute(in, o, lim);
  } catch (const ResourceCapError& e) {
    row.oracle = "-";
    row.status = "capped";
    row.detail = {{"error", e.what()}};
    return row;
  }
  const Json& rep = c.report;
  row.detail = rep;
  row.oracle = rep.at("v").is_null() ? "-" : std::to_string(rep.at("v").get<int>());
  std::string proven, conj;
  bool gap = false, conj_mismatch = false;
  for (const Json& f : rep.value("formulas", Json::array())) {
    if (!f.at("cutset").is_null()) continue;
    const std::string v = std::to_string(f.at("value").get<int>());
    if (f.at("conjecture").get<bool>()) {
      conj = v;
      if (row.oracle != "-" && row.oracle != v) conj_mismatch = true;
    } else {
      proven = f.at("exact").get<bool>() ? v : "<=" + v;
      if (!f.at("exact").get<bool>() && row.oracle != "-" && row.oracle != v) gap = true;
    }
  }
  row.formula = proven.empty() ? "-" : proven;
  row.conjecture = conj.empty() ? "-" : "CONJECTURE " + conj;
  if (c.exit_code == kDisagreement) row.status = "VIOLATION";
  else if (c.exit_code == kResource) row.status = "capped";
  else if (conj_mismatch) row.status = "CONJECTURE-MISMATCH";
  else if (gap) row.status = "gap";
  else row.status = "ok";
  return row;
}

/// Corpus sweeps with a single check per graph.
inline ScanRow corpus_instance(const Graph& g, const std::string& name, const std::string& check, const Limits& lim) {
  ScanRow row;
  row.instance = name;
  row.conjecture = "-";
  if (check == "v2") {
    const V2Result p = is_v2(g);
    const VReport r = v_oracle(g, {}, lim);
    row.oracle = r.global ? std::to_string(*r.global) : "-";
    row.formula = p.value ? "v2" : "not-v2";
    row.status = r.global && p.value == (*r.global == 2) ? "ok" : "VIOLATION";
    row.detail = {{"predicate", p.value}, {"case", p.case_tag}, {"oracle", r.global ? Json(*r.global) : Json(nullptr)}};
  } else if (check == "vempty") {
    const VEmptyResult r = v_empty(g, lim);
    row.oracle = r.intersection ? std::to_string(*r.intersection) : "-";
    row.formula = std::to_string(r.value);
    row.status = r.intersection && *r.intersection == r.value ? "ok" : "VIOLATION";
  } else if (check == "groebner") {
    const BinomialEdgeIdeal<DefaultPrimeField> j(g, lim);
    bool ok = !buchberger_check(j.groebner_basis()) && squarefree(j.initial_ideal());
    for (const auto& p : minimal_primes<DefaultPrimeField>(g, lim)) ok = ok && !buchberger_check(p.basis());
    row.oracle = std::to_string(j.groebner_basis().size());
    row.formula = "-";
    row.status = ok ? "ok" : "VIOLATION";
  } else {
    throw ParseError("unknown check '" + check + "' (v2 | vempty | groebner)");
  }
  return row;
}

inline std::string format_table(const std::vector<ScanRow>& rows) {
  std::ostringstream ss;
  ss << "instance,oracle,formula,conjecture,status\n";
  for (const auto& r : rows) ss << '"' << r.instance << "\"," << r.oracle << ',' << r.formula << ',' << r.conjecture << ',' << r.status << '\n';
  return ss.str();
}

inline int scan_exit(const std::vector<ScanRow>& rows) {
  int code = kOk;
  for (const auto& r : rows) {
    if (r.status == "VIOLATION") return kDisagreement;
    if (r.status == "capped") code = kResource;
  }
  return code;
}

// ---------------------------------------------------------------------------
// regularity

inline Json reg_report(const GraphInput& in, const std::string& ideal, bool& disagree, const Limits& lim) {
  disagree = false;
  Json rep = {{"schema", kReportSchema}, {"input", {{"source", in.source}, {"graph", graph_to_json(in.graph)}}}, {"ideal", ideal}};
  RegResult r;
  std::optional<FormulaValue> formula;
  if (ideal == "binomial") {
    r = reg_binomial(in.graph, {}, lim);
    if (in.built) {
      try {
        formula = reg_formula(in.built->spec);
      } catch (const InvalidArgument&) {
      }
    }
    if (!formula && is_complete(in.graph)) formula = FormulaValue{1, "complete graph: reg(R/J_G) = 1", false, true};
    rep["note"] = "computed from the initial ideal; equality with reg(R/J_G) is an imported theorem";
  } else if (ideal == "monomial") {
    r = reg_monomial(edge_ideal(in.graph), {}, lim);
    if (in.built && in.built->spec.family == Family::hkm) formula = reg_hkm_monomial(in.built->spec.m);
    else if (is_chordal(in.graph)) formula = FormulaValue{reg_chordal_edge(in.graph, lim), "chordal: reg(R/I(G)) = im(G)", false, true};
  } else {
    throw ParseError("unknown ideal '" + ideal + "'");
  }
  rep["reg"] = r.value;
  rep["lattice_size"] = r.lattice_size;
  rep["complexes"] = r.complexes;
  rep["rational_rechecked"] = r.rational_rechecked;
  if (formula) {
    rep["formula"] = {{"value", formula->value}, {"anchor", formula->anchor}};
    disagree = formula->value != r.value;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Entry point

inline int run(int argc, const char* const* argv, std::ostream& err = std::cerr) {
  CLI::App app{"v-numbers of binomial and monomial edge ideals"};
  app.require_subcommand(1);
  const Limits lim = Limits::from_environment();

  auto* construct = app.add_subcommand("construct", "build a named graph family");
  GraphFlags construct_flags;
  std::string format = "json", out_path;
  construct_flags.attach(construct);
  construct->add_option("--format", format, "json | graph6");
  construct->add_option("--out", out_path, "output file (default stdout)");

  auto* compute_cmd = app.add_subcommand("compute", "v-number report for one graph");
  GraphFlags compute_flags;
  ComputeOptions copt;
  int dmax = -1;
  bool no_timings = false, global_only = false;
  compute_flags.attach(compute_cmd);
  compute_cmd->add_option("--ideal", copt.ideal, "binomial | monomial");
  compute_cmd->add_option("--method", copt.method, "oracle | formula | witness | all");
  compute_cmd->add_option("--dmax", dmax, "degree cap for the oracle");
  compute_cmd->add_option("--field", copt.field, "qq | fp:P");
  compute_cmd->add_option("--out", out_path, "report file (default stdout)");
  compute_cmd->add_flag("--no-timings", no_timings, "omit timings from the report");
  compute_cmd->add_flag("--global-only", global_only, "skip locals beyond the global value");

  auto* scan = app.add_subcommand("scan", "sweep a family or a graph6 corpus");
  std::string scan_family, range = "", check = "v2", corpus_file, json_out;
  int max_t = 4, max_vertices = 8;
  unsigned jobs = default_jobs();
  scan->add_option("--family", scan_family, "cycle | path | binary-tree | clique-path | g6-corpus")->required();
  scan->add_option("--n", range, "n or a..b");
  scan->add_option("--max-t", max_t, "clique-path: most cliques");
  scan->add_option("--max-vertices", max_vertices, "clique-path: most vertices");
  scan->add_option("--file", corpus_file, "g6-corpus: one graph6 string per line");
  scan->add_option("--check", check, "g6-corpus: v2 | vempty | groebner");
  scan->add_option("--out", out_path, "table file (default stdout)");
  scan->add_option("--json", json_out, "full per-instance JSON");
  scan->add_option("--jobs", jobs, "worker threads");

  auto* verify = app.add_subcommand("verify", "re-check a certificate over the rationals");
  std::string cert_path;
  verify->add_option("--cert", cert_path, "certificate JSON")->required();

  auto* witness = app.add_subcommand("witness", "emit certificates for a graph");
  GraphFlags witness_flags;
  std::vector<int> cutset;
  bool from_oracle = false;
  witness_flags.attach(witness);
  witness->add_option("--cutset", cutset, "only this cut set")->delimiter(',');
  witness->add_flag("--oracle", from_oracle, "use the oracle's witness instead of a family construction");
  witness->add_option("--out", out_path, "certificate file (default stdout)");

  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  GraphFlags reg_flags;
  std::string reg_ideal = "binomial";
  reg_flags.attach(reg);
  reg->add_option("--ideal", reg_ideal, "monomial | binomial");
  reg->add_option("--out", out_path, "report file (default stdout)");

  auto* corpus = app.add_subcommand("corpus", "connected graphs up to isomorphism, as graph6");
  int corpus_max = 6;
  corpus->add_option("--max-n", corpus_max, "largest order (at most 7)");
  corpus->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  try {
    if (*construct) {
      const GraphInput in = construct_flags.load();
      if (format == "graph6") {
        emit(out_path, to_graph6(in.graph) + "\n");
      } else if (format == "json") {
        Json j = graph_to_json(in.graph);
        if (in.built) {
          j["family"] = in.built->spec.describe();
          j["names"] = in.built->names;
        }
        emit(out_path, dump(j));
      } else {
        throw ParseError("unknown format '" + format + "'");
      }
      return kOk;
    }
    if (*compute_cmd) {
      if (dmax >= 0) copt.d_max = dmax;
      copt.timings = !no_timings;
      copt.all_locals = !global_only;
      const ComputeResult r = compute(compute_flags.load(), copt, lim);
      emit(out_path, dump(r.report));
      for (const auto& d : r.report.value("disagreements", Json::array())) err << "DISAGREEMENT: " << d.get<std::string>() << "\n";
      return r.exit_code;
    }
    if (*scan) {
      std::vector<ScanRow> rows;
      if (scan_family == "g6-corpus") {
        if (corpus_file.empty()) throw ParseError("g6-corpus needs --file");
        std::vector<std::string> lines;
        std::istringstream ss(read_file(corpus_file));
        for (std::string line; std::getline(ss, line);) {
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (!line.empty()) lines.push_back(line);
        }
        std::vector<Graph> graphs;
        for (const auto& l : lines) graphs.push_back(from_graph6(l));
        if (check != "v2" && check != "vempty" && check != "groebner") throw ParseError("unknown check '" + check + "'");
        rows = parallel_map<ScanRow>(graphs.size(), jobs, [&](std::size_t i) { return corpus_instance(graphs[i], lines[i], check, lim); });
      } else {
        std::vector<GraphInput> inputs;
        if (scan_family == "clique-path") {
          for (auto& sizes : clique_path_tuples(max_t, max_vertices)) {
            GraphFlags f;
            f.family = "clique-path";
            f.sizes = sizes;
            inputs.push_back(f.load());
          }
        } else {
          if (range.empty()) throw ParseError("--n is required for " + scan_family);
          const auto [a, b] = parse_range(range);
          for (int n = a; n <= b; ++n) {
            GraphFlags f;
            f.family = scan_family;
            f.n = n;
            inputs.push_back(f.load());
          }
        }
        rows = parallel_map<ScanRow>(inputs.size(), jobs, [&](std::size_t i) { return scan_instance(inputs[i], lim); });
      }
      emit(out_path, format_table(rows));
      if (!json_out.empty()) {
        Json all = Json::array();
        for (const auto& r : rows)
          all.push_back({{"instance", r.instance}, {"oracle", r.oracle}, {"formula", r.formula}, {"conjecture", r.conjecture},
                         {"status", r.status}, {"detail", r.detail}});
        write_file(json_out, dump(all));
      }
      return scan_exit(rows);
    }
    if (*verify) {
      // a single certificate, or the array written by `witness` without --cutset
      const Json doc = parse_json_text(read_file(cert_path));
      std::vector<Json> items;
      if (doc.is_array()) {
        items.assign(doc.begin(), doc.end());
      } else {
        items.push_back(doc);
      }
      bool all = !items.empty();
      for (const Json& item : items) {
        const Certificate c = certificate_from_json(item);
        const Verification v = verify_certificate(c, lim);
        if (v.check.accepted) {
          std::cout << "PASS " << format_set(c.cut_set) << " degree " << c.witness.degree() << "\n";
        } else {
          std::cout << "FAIL " << format_set(c.cut_set) << " " << v.check.reason;
          if (v.check.failing_generator) std::cout << " (generator " << *v.check.failing_generator << ")";
          std::cout << "\n";
        }
        if (!v.matches_record) std::cout << "note: recorded results differ from the recomputation\n";
        all = all && v.check.accepted;
      }
      return all ? kOk : kFailed;
    }
    if (*witness) {
      const GraphInput in = witness_flags.load();
      std::optional<VertexSet> only;
      if (!cutset.empty()) only = make_set(cutset);
      Json certs = Json::array();
      if (from_oracle) {
        Oracle o(in.graph, {}, lim);
        for (std::size_t i = 0; i < o.primes().size(); ++i) {
          if (only && o.primes()[i].vertices() != *only) continue;
          LocalEntry e = o.local(i);
          if (e.witness) certs.push_back(certificate_to_json(make_certificate(in.graph, e.cut_set, *e.witness, "oracle", lim)));
        }
      } else {
        for (Witness& w : applicable_witnesses(in, lim)) {
          if (only && w.cut_set != *only) continue;
          certs.push_back(certificate_to_json(make_certificate(in.graph, w.cut_set, std::move(w.f), w.construction, lim)));
        }
      }
      if (certs.empty()) throw InvalidArgument("no witness construction for the requested cut set");
      emit(out_path, dump(certs.size() == 1 ? certs[0] : certs));
      bool all = true;
      for (const auto& c : certs) all = all && c.at("accepted").get<bool>();
      return all ? kOk : kDisagreement;
    }
    if (*reg) {
      bool disagree = false;
      const Json rep = reg_report(reg_flags.load(), reg_ideal, disagree, lim);
      emit(out_path, dump(rep));
      return disagree ? kDisagreement : kOk;
    }
    if (*corpus) {
      std::string text;
      for (int n = 1; n <= corpus_max; ++n)
        for (const Graph& g : connected_graphs(n)) text += to_graph6(g) + "\n";
      emit(out_path, text);
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const UnknownName& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResource;
  } catch (const DisagreementError& e) {
    err << "DISAGREEMENT: " << e.what() << "\n";
    return kDisagreement;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}

}  // namespace vnum::cli

#endif  // VNUM_CLI_HPP
