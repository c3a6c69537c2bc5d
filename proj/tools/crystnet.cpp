// Command-line front end: realize, enumerate, verify, jacobian, basis, frame.
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "crystnet/io.hpp"
#include "crystnet/verify.hpp"

using namespace crystnet;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

// largest accepted bound on h^2 for `enumerate`
const Rat kMaxHeightSq = 10000;

struct Options {
  std::uint64_t seed = 0;
  bool allow_low_degree = false;
  std::string graph;
  std::string summand = "zero";
  std::string exporter = "json";
  std::size_t radius = 1;
  std::size_t dim = 2;
  std::string height_bound = "sqrt(3)";
  std::string format = "json";
  std::string suite;
  std::string suite_flag;
  std::string frame_name;
};

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

FiniteGraph load(const Options& o) { return load_graph(o.graph, GraphOptions{o.allow_low_degree}); }

Json summand_json(const IntLattice& h) {
  Json j;
  j["rank"] = h.rank();
  j["generators"] = Json::array();
  for (const auto& c : h.basis().columns()) j["generators"].push_back(to_json(c));
  return j;
}

int cmd_realize(const Options& o) {
  FiniteGraph g = load(o);
  HomologyBasis hb = homology_basis(g);
  VanishingSummand vs = VanishingSummand::make(g, parse_summand(o.summand, hb.rank()));
  Realization r = standard_realization(vs);
  RealizationReport rep = report_for(vs, r);
  if (o.exporter == "obj") {
    std::vector<std::string> header{
        "standard realization, d = " + std::to_string(vs.d) + ", radius " + std::to_string(o.radius),
        std::string("harmonic ") + (rep.harmonic ? "yes" : "no") + ", tight " + (rep.tight ? "yes" : "no"),
        "energy " + format_double(rep.energy.value) + " = " + to_string(rep.energy.sum_sq) + " / (" +
            to_string(rep.energy.vol_sq) + ")^(1/" + std::to_string(vs.d) + ")",
        "distortion R = " + format_double(rep.ratio)};
    if (rep.point) header.push_back("D = " + to_string(rep.point->D));
    std::cout << export_obj(r, o.radius, header);
  } else {
    Json j;
    j["graph"] = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"b1", hb.rank()}};
    j["summand"] = summand_json(vs.h);
    j["d"] = vs.d;
    j["net"] = export_json(r, o.radius);
    j["report"] = to_json(rep);
    print(j);
  }
  return rep.all_green() ? 0 : kExitFail;
}

int cmd_enumerate(const Options& o) {
  FiniteGraph g = load(o);
  HomologyBasis hb = homology_basis(g);
  const std::size_t b = hb.rank();
  if (o.dim < 1 || o.dim > b)
    throw Error(ErrorCode::BadParameters, "--dim must lie in 1.." + std::to_string(b));
  Rat bound = parse_height_bound(o.height_bound);
  if (bound > kMaxHeightSq) throw Error(ErrorCode::BoundTooLarge, "h^2 bound above " + to_string(kMaxHeightSq));
  const std::size_t r = b - o.dim;
  std::vector<IntLattice> hs;
  if (r == 0) {
    if (bound >= 1) hs.push_back(IntLattice::zero(b));
  } else {
    EnumerationOptions opt;
    opt.form = &hb.gram;
    hs = enumerate_summands(b, r, bound, opt);
  }
  Int kappa = determinant(hb.gram);
  Json rows = Json::array();
  for (const auto& h : hs) {
    VanishingSummand vs = VanishingSummand::make(g, h);
    Json row;
    row["h_sq"] = to_string(covolume_squared(h, &hb.gram));
    row["vol_sq"] = to_string(torus_volume(vs));
    row["summand"] = summand_json(h);
    if (o.dim == 2) {
      QuadricPoint2D q = quadric_point_2d(vs);
      row["D"] = to_string(q.D);
      row["point"] = to_json(q)["point"];
    }
    rows.push_back(row);
  }
  if (o.format == "table") {
    std::cout << "# b1 = " << b << ", d = " << o.dim << ", kappa = " << kappa << ", h^2 <= " << to_string(bound)
              << ", " << rows.size() << " rows\n";
    for (const auto& row : rows) {
      std::cout << row["h_sq"].get<std::string>() << "\t" << row["vol_sq"].get<std::string>();
      if (o.dim == 2) {
        std::cout << "\t" << row["D"].get<std::string>() << "\t";
        for (const auto& z : row["point"])
          std::cout << " (" << z["re"].get<std::string>() << ", " << z["im"].get<std::string>() << ")";
      }
      std::cout << "\t" << row["summand"]["generators"].dump() << "\n";
    }
    return 0;
  }
  Json j;
  j["b1"] = b;
  j["d"] = o.dim;
  j["kappa"] = to_string(kappa);
  j["height_sq_bound"] = to_string(bound);
  j["count"] = rows.size();
  j["rows"] = rows;
  print(j);
  return 0;
}

int cmd_verify(const Options& o) {
  if (!o.suite.empty() && !o.suite_flag.empty() && o.suite != o.suite_flag)
    throw Error(ErrorCode::BadParameters, "two different suites given");
  std::string suite = o.suite.empty() ? o.suite_flag : o.suite;
  if (suite.empty()) throw Error(ErrorCode::BadParameters, "no suite given");
  SuiteReport rep = run_suite(suite, o.seed);
  print(to_json(rep));
  return rep.passed() ? 0 : kExitFail;
}

int cmd_jacobian(const Options& o) {
  print(jacobian_to_json(load(o)));
  return 0;
}

int cmd_basis(const Options& o) {
  FiniteGraph g = load(o);
  HomologyBasis hb = homology_basis(g);
  Json j = basis_to_json(g, hb);
  if (o.format == "json") {
    print(j);
    return 0;
  }
  std::cout << "# b1 = " << hb.rank() << "; summand rows use these coordinates\n";
  for (std::size_t i = 0; i < hb.rank(); ++i) {
    std::cout << "c" << i + 1 << ":";
    for (const auto& t : j["cycles"][i]["edges"]) std::cout << " " << t.get<std::string>();
    std::cout << "\n";
  }
  std::cout << "# cycle Gram matrix\n";
  for (std::size_t i = 0; i < hb.rank(); ++i) {
    for (std::size_t k = 0; k < hb.rank(); ++k) std::cout << (k ? " " : "") << hb.gram(i, k);
    std::cout << "\n";
  }
  return 0;
}

int cmd_frame(const Options& o) {
  Frame f = catalog_frame(o.frame_name);
  Json j;
  j["name"] = o.frame_name;
  j["frame"] = to_json(f);
  auto t = is_tight(f);
  j["tight"] = t.has_value();
  if (t) j["tight_constant"] = t->exact ? Json(to_string(*t->exact)) : Json(std::stod(format_double(t->value)));
  j["naimark"] = naimark_check(f);
  bool cryst = f.is_exact() && is_crystallographic(f);
  j["crystallographic"] = cryst;
  if (cryst) {
    IntLattice h = vanishing_group(f);
    j["vanishing_group"] = summand_json(h);
    j["h_sq"] = to_string(covolume_squared(h));
    PeriodLattice pl = period_lattice(f);
    j["period_gram"] = to_json(pl.gram);
    j["vol_sq"] = to_string(pl.vol_squared);
  }
  print(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological crystals over finite graphs: realizations, Jacobians and frames."};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Seed for randomized corpora")->capture_default_str();
  app.add_flag("--allow-low-degree", o.allow_low_degree, "Accept vertices of degree below 3");

  auto* realize = app.add_subcommand("realize", "Standard realization of a topological crystal");
  realize->add_option("graph", o.graph, "Graph file (text or JSON)")->required();
  realize->add_option("--summand", o.summand, "'zero' or integer rows in homology coordinates")->capture_default_str();
  realize->add_option("--export", o.exporter, "Output format")->check(CLI::IsMember({"json", "obj"}))->capture_default_str();
  realize->add_option("--radius", o.radius, "Patch radius in lattice steps")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "Summands with bounded height and their nets");
  enumerate->add_option("graph", o.graph, "Graph file (text or JSON)")->required();
  enumerate->add_option("--dim", o.dim, "Dimension of the nets")->capture_default_str();
  enumerate->add_option("--height-bound", o.height_bound, "Bound on h: 'sqrt(n)' or a rational")->capture_default_str();
  enumerate->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  std::string suites;
  for (const auto& s : suite_names()) suites += (suites.empty() ? "" : ", ") + s;
  verify->add_option("name", o.suite, "One of: " + suites);
  verify->add_option("--suite", o.suite_flag, "Same as the positional argument");

  auto* jac = app.add_subcommand("jacobian", "Jacobian, Abel–Jacobi table and pairing");
  jac->add_option("graph", o.graph, "Graph file (text or JSON)")->required();

  auto* basis = app.add_subcommand("basis", "Print the homology basis used by --summand");
  basis->add_option("graph", o.graph, "Graph file (text or JSON)")->required();
  basis->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}))->default_val("text");

  auto* frame = app.add_subcommand("frame", "Catalog frame with tightness and vanishing group");
  frame->add_option("name", o.frame_name, "Catalog name, e.g. hexagon, A:3, pythagorean:3,4,5")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*realize) return cmd_realize(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*verify) return cmd_verify(o);
    if (*jac) return cmd_jacobian(o);
    if (*basis) return cmd_basis(o);
    if (*frame) return cmd_frame(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::Internal ? kExitFail : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitInput;
}
