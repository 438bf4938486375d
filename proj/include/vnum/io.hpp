#ifndef VNUM_IO_HPP
#define VNUM_IO_HPP

// File formats: graphs (JSON and graph6), polynomials (exponent-vector JSON),
// colon certificates and v-number reports. Objects serialize with sorted keys
// so equal inputs give byte-identical output.

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vnum/error.hpp"
#include "vnum/field.hpp"
#include "vnum/graph.hpp"
#include "vnum/ideals.hpp"
#include "vnum/polynomial.hpp"
#include "vnum/vnum.hpp"

namespace vnum {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "vnum-report/1";
inline constexpr const char* kCertificateSchema = "vnum-certificate/1";

// ---------------------------------------------------------------------------
// Graphs

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", edges}};
}

inline Graph graph_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw ParseError("graph JSON needs \"n\" and \"edges\"");
    const int n = j.at("n").get<int>();
    if (n < 0 || n > kMaxGraphOrder) throw ParseError("graph order " + std::to_string(n) + " out of range");
    std::vector<Edge> edges;
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [i, j]");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph(n, edges);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

/// graph6, orders up to 62: N(n) then the upper triangle column by column, 6 bits per byte.
inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw InvalidArgument("graph6 output supports n <= 62");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, bits = 0;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.rfind(">>graph6<<", 0) == 0) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range in '" + std::string(text) + "'");
  }
  if (text[0] == 126) throw ParseError("graph6 orders above 62 are not supported");
  const int n = text[0] - 63;
  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t need = (pairs + 5) / 6;
  if (text.size() != 1 + need) throw ParseError("graph6 string has the wrong length for n = " + std::to_string(n));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

/// Graph from a file: JSON when it starts with '{', graph6 otherwise (first line).
inline Graph read_graph_file(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError(path + " is empty");
  if (text[first] == '{') return graph_from_json(parse_json_text(text));
  return from_graph6(text.substr(first, text.find('\n', first) - first));
}

/// Every connected graph on n vertices up to isomorphism, each in its
/// lexicographically least adjacency form. Brute force over all labellings.
inline std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 7) throw ResourceCapError("connected_graphs enumerates n <= 7 only");
  std::vector<std::pair<int, int>> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  const int m = static_cast<int>(slots.size());
  std::vector<int> slot_of(static_cast<std::size_t>(n * n), 0);
  for (int s = 0; s < m; ++s) {
    slot_of[static_cast<std::size_t>(slots[static_cast<std::size_t>(s)].first * n + slots[static_cast<std::size_t>(s)].second)] = s;
    slot_of[static_cast<std::size_t>(slots[static_cast<std::size_t>(s)].second * n + slots[static_cast<std::size_t>(s)].first)] = s;
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto to_graph = [&](std::uint32_t mask) {
    std::vector<Edge> edges;
    for (int s = 0; s < m; ++s)
      if ((mask >> s) & 1) edges.push_back({slots[static_cast<std::size_t>(s)].first + 1, slots[static_cast<std::size_t>(s)].second + 1});
    return Graph(n, edges);
  };
  std::vector<char> seen(std::size_t{1} << m, 0);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    if (seen[mask]) continue;
    std::uint32_t best = mask;
    for (const auto& q : perms) {
      std::uint32_t image = 0;
      for (int s = 0; s < m; ++s) {
        if ((mask >> s) & 1) {
          const auto& [a, b] = slots[static_cast<std::size_t>(s)];
          image |= std::uint32_t{1} << slot_of[static_cast<std::size_t>(q[static_cast<std::size_t>(a)] * n + q[static_cast<std::size_t>(b)])];
        }
      }
      seen[image] = 1;
      best = std::min(best, image);
    }
    const Graph g = to_graph(best);
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials

inline std::string rational_text(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
  try {
    Rational q(s, 10);
    // GMP aborts on a zero denominator, so catch it first
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational coefficient '" + s + "'");
  }
}

/// {"nvars": N, "terms": [{"exp": [...], "coeff": "p/q"}, ...]}, terms in lex-descending order.
inline Json polynomial_to_json(const Polynomial<Rational>& p, const VariableSpace& space) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> exp(static_cast<std::size_t>(space.count()));
    for (int i = 0; i < space.count(); ++i) exp[static_cast<std::size_t>(i)] = m[i];
    terms.push_back({{"exp", exp}, {"coeff", rational_text(c)}});
  }
  return {{"nvars", space.count()}, {"terms", terms}, {"text", format_polynomial(p, space)}};
}

inline Polynomial<Rational> polynomial_from_json(const Json& j, const VariableSpace& space) {
  try {
    if (j.at("nvars").get<int>() != space.count()) throw ParseError("polynomial has the wrong number of variables");
    Polynomial<Rational> p;
    for (const Json& t : j.at("terms")) {
      const auto exp = t.at("exp").get<std::vector<int>>();
      if (static_cast<int>(exp.size()) != space.count()) throw ParseError("exponent vector has the wrong length");
      Monomial m;
      for (int i = 0; i < space.count(); ++i) {
        const int e = exp[static_cast<std::size_t>(i)];
        if (e < 0 || e > 255) throw ParseError("exponent out of range");
        m.set(i, e);
      }
      const Json& c = t.at("coeff");
      p.add_term(m, c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
    }
    return p;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

inline Json vertex_list(VertexSet s) { return members(s); }

inline VertexSet vertex_set_from_json(const Json& j, int n) {
  VertexSet s = 0;
  for (const Json& v : j) {
    const int x = v.get<int>();
    if (x < 1 || x > n) throw ParseError("vertex " + std::to_string(x) + " out of range");
    s |= bit(x);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Certificates

struct Certificate {
  Graph graph;
  VertexSet cut_set = 0;
  Polynomial<Rational> witness;
  std::string construction;
  std::string field = "qq";
  ColonCheck check;  // results recorded at creation
};

/// Runs the colon check over Q and records the outcome.
inline Certificate make_certificate(const Graph& g, VertexSet s, Polynomial<Rational> f, std::string construction,
                                    const Limits& lim = default_limits()) {
  if (!is_connected(g)) throw InvalidArgument("certificates need a connected graph");
  if (s != 0 && !is_cut_set(g, s)) throw InvalidArgument(format_set(s) + " is not a cut set");
  Certificate c{g, s, std::move(f), std::move(construction), "qq", {}};
  const BinomialEdgeIdeal<Rational> j(g, lim);
  const PrimeComponent<Rational> p(g, make_cut_set(g, s));
  c.check = colon_certificate_check(j, p, c.witness);
  return c;
}

inline Json certificate_to_json(const Certificate& c) {
  const VariableSpace space = VariableSpace::binomial(c.graph.order());
  const PrimeComponent<Rational> p(c.graph, make_cut_set(c.graph, c.cut_set));
  Json gens = Json::array();
  const auto& elems = p.basis().elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Json e = {{"index", i}, {"generator", format_polynomial(elems[i].poly, space)}};
    if (i < c.check.generator_in_ideal.size()) e["times_witness_in_ideal"] = static_cast<bool>(c.check.generator_in_ideal[i]);
    gens.push_back(e);
  }
  return {{"schema", kCertificateSchema},
          {"graph", graph_to_json(c.graph)},
          {"cutset", vertex_list(c.cut_set)},
          {"witness", polynomial_to_json(c.witness, space)},
          {"degree", c.witness.is_zero() ? -1 : c.witness.degree()},
          {"construction", c.construction},
          {"field", c.field},
          {"witness_in_prime", c.check.f_in_prime},
          {"generators", gens},
          {"accepted", c.check.accepted},
          {"reason", c.check.reason}};
}

inline Certificate certificate_from_json(const Json& j) {
  try {
    if (j.value("schema", std::string()) != kCertificateSchema) throw ParseError("not a vnum certificate");
    Certificate c;
    c.graph = graph_from_json(j.at("graph"));
    c.cut_set = vertex_set_from_json(j.at("cutset"), c.graph.order());
    c.witness = polynomial_from_json(j.at("witness"), VariableSpace::binomial(c.graph.order()));
    c.construction = j.value("construction", std::string());
    c.field = j.value("field", std::string("qq"));
    c.check.accepted = j.value("accepted", false);
    c.check.f_in_prime = j.value("witness_in_prime", false);
    c.check.reason = j.value("reason", std::string());
    for (const Json& g : j.at("generators")) c.check.generator_in_ideal.push_back(g.value("times_witness_in_ideal", false));
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

struct Verification {
  ColonCheck check;          // recomputed over Q
  bool matches_record = true;  // recomputed results equal the recorded ones
};

/// Recomputes the colon check over the rationals from scratch.
inline Verification verify_certificate(const Certificate& c, const Limits& lim = default_limits()) {
  if (!is_connected(c.graph)) throw ParseError("certificate graph is not connected");
  if (c.cut_set != 0 && !is_cut_set(c.graph, c.cut_set)) throw ParseError(format_set(c.cut_set) + " is not a cut set");
  Verification v;
  const BinomialEdgeIdeal<Rational> j(c.graph, lim);
  const PrimeComponent<Rational> p(c.graph, make_cut_set(c.graph, c.cut_set));
  v.check = colon_certificate_check(j, p, c.witness);
  v.matches_record = v.check.accepted == c.check.accepted && v.check.f_in_prime == c.check.f_in_prime &&
                     v.check.generator_in_ideal == c.check.generator_in_ideal;
  return v;
}

// ---------------------------------------------------------------------------
// Reports

inline Json local_entry_to_json(const LocalEntry& e, const VariableSpace& space) {
  Json j = {{"cutset", vertex_list(e.cut_set)},
            {"lower_bound", e.lower_bound},
            {"method", method_name(e.method)},
            {"certified", e.certified}};
  j["value"] = e.value ? Json(*e.value) : Json(nullptr);
  j["upper_bound"] = e.upper_bound ? Json(*e.upper_bound) : Json(nullptr);
  if (e.witness) j["witness"] = polynomial_to_json(*e.witness, space);
  return j;
}

inline Json report_to_json(const VReport& r) {
  const VariableSpace space = VariableSpace::binomial(r.graph.order());
  Json locals = Json::array();
  for (const auto& e : r.locals) locals.push_back(local_entry_to_json(e, space));
  Json j = {{"graph", graph_to_json(r.graph)},
            {"field", r.field},
            {"locals", locals},
            {"v_empty", r.v_empty},
            {"complete", r.complete},
            {"caps_hit", r.caps_hit},
            {"notes", r.notes}};
  j["v"] = r.global ? Json(*r.global) : Json(nullptr);
  j["global_cutset"] = r.global_cut_set ? vertex_list(*r.global_cut_set) : Json(nullptr);
  return j;
}

/// Two-space indentation, sorted keys, trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace vnum

#endif  // VNUM_IO_HPP
