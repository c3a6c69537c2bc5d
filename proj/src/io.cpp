#include "crystnet/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace crystnet {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

long parse_index(const std::string& tok, std::size_t line, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    parse_fail(line, std::string("expected an integer ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size()) parse_fail(line, std::string("expected an integer ") + what + ", got '" + tok + "'");
  if (v < 0) parse_fail(line, std::string(what) + " must be non-negative");
  return v;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double clean(double x) { return std::abs(x) < 1e-13 ? 0.0 : x; }

Json float_array(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(std::stod(format_double(v(i))));
  return a;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", clean(x));
  return buf;
}

FiniteGraph parse_graph_text(const std::string& text, GraphOptions options) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  std::optional<long> vertices;
  std::vector<EdgeRecord> edges;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    std::istringstream ls(s);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok[0] == "V") {
      if (tok.size() != 2) parse_fail(line, "expected 'V <n>'");
      if (vertices) parse_fail(line, "vertex count given twice");
      vertices = parse_index(tok[1], line, "vertex count");
      if (*vertices == 0) parse_fail(line, "vertex count must be positive");
    } else if (tok[0] == "E") {
      if (tok.size() != 4) parse_fail(line, "expected 'E <id> <a> <b>'");
      EdgeRecord e;
      e.id = tok[1];
      e.a = static_cast<std::size_t>(parse_index(tok[2], line, "endpoint"));
      e.b = static_cast<std::size_t>(parse_index(tok[3], line, "endpoint"));
      edges.push_back(e);
    } else {
      parse_fail(line, "unknown record '" + tok[0] + "'");
    }
  }
  if (!vertices) parse_fail(line, "missing 'V <n>' record");
  return FiniteGraph::build(static_cast<std::size_t>(*vertices), std::move(edges), options);
}

FiniteGraph parse_graph_json(const std::string& text, GraphOptions options) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "graph JSON must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "vertices" && key != "edges") throw Error(ErrorCode::ParseError, "unknown field '" + key + "'");
  if (!j.contains("vertices") || !j["vertices"].is_number_unsigned())
    throw Error(ErrorCode::ParseError, "'vertices' must be a non-negative integer");
  if (!j.contains("edges") || !j["edges"].is_array()) throw Error(ErrorCode::ParseError, "'edges' must be an array");
  std::vector<EdgeRecord> edges;
  std::size_t k = 0;
  for (const auto& e : j["edges"]) {
    const std::string where = "edge " + std::to_string(k++);
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_number_unsigned() ||
        !e[2].is_number_unsigned())
      throw Error(ErrorCode::ParseError, where + ": expected [id, a, b]");
    edges.push_back({e[0].get<std::string>(), e[1].get<std::size_t>(), e[2].get<std::size_t>()});
  }
  std::size_t n = j["vertices"].get<std::size_t>();
  if (n == 0) throw Error(ErrorCode::ParseError, "'vertices' must be positive");
  return FiniteGraph::build(n, std::move(edges), options);
}

FiniteGraph parse_graph(const std::string& text, GraphOptions options) {
  std::string t = trim(text);
  if (!t.empty() && t[0] == '{') return parse_graph_json(text, options);
  return parse_graph_text(text, options);
}

FiniteGraph load_graph(const std::string& path, GraphOptions options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str(), options);
}

std::string graph_to_text(const FiniteGraph& g) {
  std::ostringstream out;
  out << "V " << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) out << "E " << e.id << " " << e.a << " " << e.b << "\n";
  return out.str();
}

IntLattice parse_summand(const std::string& spec, std::size_t b) {
  std::string s = trim(spec);
  if (s == "zero" || s == "{0}" || s == "0") return IntLattice::zero(b);
  std::vector<IntVector> rows;
  std::string row;
  std::istringstream in(s);
  std::size_t k = 0;
  while (std::getline(in, row, ';')) {
    std::istringstream lines(row);
    std::string line;
    while (std::getline(lines, line)) {
      line = trim(line);
      if (line.empty()) continue;
      ++k;
      IntVector v;
      std::istringstream ts(line);
      for (std::string t; ts >> t;) {
        try {
          v.push_back(parse_integer(t));
        } catch (const Error&) {
          throw Error(ErrorCode::ParseError, "summand row " + std::to_string(k) + ": bad integer '" + t + "'");
        }
      }
      if (v.size() != b)
        throw Error(ErrorCode::DimensionMismatch,
                    "summand row " + std::to_string(k) + " has " + std::to_string(v.size()) + " entries, b1 = " +
                        std::to_string(b));
      rows.push_back(std::move(v));
    }
  }
  if (rows.empty()) return IntLattice::zero(b);
  IntMatrix m(b, rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t i = 0; i < b; ++i) m(i, j) = rows[j][i];
  return IntLattice::from_generators(m);
}

Rat parse_height_bound(const std::string& text) {
  std::string s = trim(text);
  Rat out;
  if (s.rfind("sqrt(", 0) == 0 && s.back() == ')') {
    out = parse_rational(s.substr(5, s.size() - 6));
    if (out < 0) throw Error(ErrorCode::BadParameters, "height bound must be non-negative");
    return out;
  }
  Rat h = parse_rational(s);
  if (h < 0) throw Error(ErrorCode::BadParameters, "height bound must be non-negative");
  return h * h;
}

Json to_json(const Rat& r) { return to_string(r); }
Json to_json(const Int& n) { return to_string(n); }

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const RatMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const AbelianInvariants& a) {
  Json j;
  j["factors"] = Json::array();
  for (const auto& f : a.nontrivial()) j["factors"].push_back(to_string(f));
  j["free_rank"] = a.free_rank;
  j["order"] = to_string(a.order());
  return j;
}

Json to_json(const Frame& f) {
  Json j;
  j["dim"] = f.dim();
  j["size"] = f.size();
  j["columns"] = Json::array();
  if (!f.is_exact()) {
    j["approximate"] = true;
    Eigen::MatrixXd v = f.float_view();
    for (Eigen::Index k = 0; k < v.cols(); ++k) j["columns"].push_back({{"entries", float_array(v.col(k))}});
    return j;
  }
  for (std::size_t k = 0; k < f.dim(); ++k) {
    Json c;
    c["D"] = to_string(f.scales()[k].D);
    c["m"] = to_string(f.scales()[k].m);
    c["entries"] = to_json(f.numerators().column(k));
    j["columns"].push_back(c);
  }
  return j;
}

Json to_json(const SurdComplex& z) { return {{"re", to_string(z.re)}, {"im", to_string(z.im)}, {"D", to_string(z.D)}}; }

Json to_json(const QuadricPoint2D& q) {
  Json j;
  j["D"] = to_string(q.D);
  j["point"] = Json::array();
  j["conjugate"] = Json::array();
  for (const auto& z : q.point) j["point"].push_back(to_json(z));
  for (const auto& z : q.conjugate) j["conjugate"].push_back(to_json(z));
  return j;
}

Json basis_to_json(const FiniteGraph& g, const HomologyBasis& hb) {
  Json j;
  j["b1"] = hb.rank();
  Json tree = Json::array();
  for (auto e : hb.tree_edges) tree.push_back(g.edge(e).id);
  j["tree_edges"] = tree;
  j["cycles"] = Json::array();
  for (std::size_t i = 0; i < hb.rank(); ++i) {
    Json terms = Json::array();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Rat& c = hb.cycles[i].coeffs[e];
      if (c == 0) continue;
      terms.push_back((c > 0 ? "+" : "-") + g.edge(e).id);
    }
    j["cycles"].push_back({{"through", g.edge(hb.cotree_edges[i]).id}, {"edges", terms}});
  }
  j["gram"] = to_json(hb.gram);
  return j;
}

RealizationReport report_for(const VanishingSummand& vs, const Realization& r) {
  RealizationReport rep;
  Distortion d = distortion(r);
  rep.harmonic = d.harmonic;
  rep.tight = d.tight;
  rep.ratio = d.ratio;
  rep.energy = energy(r);
  rep.torus_volume_sq = torus_volume(vs);
  if (vs.d == 2) rep.point = quadric_point_2d(r);
  return rep;
}

Json to_json(const RealizationReport& rep) {
  Json j;
  j["harmonic"] = rep.harmonic;
  j["tight"] = rep.tight;
  j["distortion_ratio"] = std::stod(format_double(rep.ratio));
  j["energy"] = {{"sum_sq", to_string(rep.energy.sum_sq)},
                 {"vol_sq", to_string(rep.energy.vol_sq)},
                 {"value", std::stod(format_double(rep.energy.value))}};
  j["torus_volume_sq"] = to_string(rep.torus_volume_sq);
  if (rep.point) j["quadric_point"] = to_json(*rep.point);
  j["all_green"] = rep.all_green();
  return j;
}

Json export_json(const Realization& r, std::size_t radius) {
  std::vector<PatchVertex> patch = realize_patch(r, radius);
  std::map<std::pair<std::size_t, IntVector>, std::size_t> index;
  for (std::size_t i = 0; i < patch.size(); ++i) index[{patch[i].vertex, patch[i].offset}] = i;
  Json j;
  j["dim"] = r.cochain.dim();
  j["radius"] = radius;
  j["vertices"] = Json::array();
  j["edges"] = Json::array();
  for (std::size_t i = 0; i < patch.size(); ++i) {
    const auto& pv = patch[i];
    j["vertices"].push_back({{"id", i}, {"vertex", pv.vertex}, {"offset", to_json(pv.offset)}, {"pos", float_array(pv.position)}});
    for (const auto& pe : pv.edges) {
      if (pe.edge.reversed) continue;
      auto it = index.find({pe.target, pe.target_offset});
      if (it == index.end()) continue;
      j["edges"].push_back({{"edge", r.graph.edge(pe.edge.edge).id}, {"from", i}, {"to", it->second}});
    }
  }
  j["period_vectors"] = Json::array();
  for (Eigen::Index k = 0; k < r.float_periods.rows(); ++k)
    j["period_vectors"].push_back(float_array(r.float_periods.row(k).transpose()));
  j["period_lift"] = to_json(r.period_lift);
  j["period_gram"] = to_json(r.period_gram);
  j["gram"] = to_json(r.cochain.gram());
  j["bonds"] = to_json(r.cochain.frame());
  return j;
}

std::string export_obj(const Realization& r, std::size_t radius, const std::vector<std::string>& header) {
  const std::size_t d = r.cochain.dim();
  if (d > 3) throw Error(ErrorCode::InvalidInput, "OBJ export needs d <= 3");
  std::vector<PatchVertex> patch = realize_patch(r, radius);
  std::map<std::pair<std::size_t, IntVector>, std::size_t> index;
  for (std::size_t i = 0; i < patch.size(); ++i) index[{patch[i].vertex, patch[i].offset}] = i;
  std::ostringstream out;
  for (const auto& h : header) out << "# " << h << "\n";
  for (const auto& pv : patch) {
    out << "v";
    for (std::size_t k = 0; k < 3; ++k) out << " " << format_double(k < d ? pv.position(static_cast<Eigen::Index>(k)) : 0.0);
    out << "\n";
  }
  for (std::size_t i = 0; i < patch.size(); ++i)
    for (const auto& pe : patch[i].edges) {
      if (pe.edge.reversed) continue;
      auto it = index.find({pe.target, pe.target_offset});
      if (it == index.end()) continue;
      out << "l " << i + 1 << " " << it->second + 1 << "\n";
    }
  return out.str();
}

Json jacobian_to_json(const FiniteGraph& g) {
  JacobianData jac = jacobian(g);
  PicardData pic = picard(g);
  Json j;
  j["invariants"] = to_json(jac.invariants);
  j["kappa"] = to_string(jac.kappa);
  j["abel_jacobi_table"] = Json::array();
  std::vector<JacobianElement> al;
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    DivisorClass aj = abel_jacobi(g, pic, x, 0);
    al.push_back(albanese(jac, g, x, 0));
    j["abel_jacobi_table"].push_back({{"vertex", x},
                                      {"picard", to_json(aj.canonical)},
                                      {"albanese", to_json(al.back().coords)},
                                      {"phi_matches", abel_map(jac, g, aj.representative) == al.back()}});
  }
  j["pairing_table"] = Json::array();
  for (const auto& a : al) {
    Json row = Json::array();
    for (const auto& b : al) row.push_back(to_string(jacobian_pairing(jac, a, b)));
    j["pairing_table"].push_back(row);
  }
  return j;
}

}  // namespace crystnet
