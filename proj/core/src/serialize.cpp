#include "interpen/serialize.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <algorithm>
#include <sstream>

#include "interpen/error.hpp"

namespace interpen {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_error(std::string("missing field '") + name + "'");
  return j.at(name);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) parse_error(std::string("expected a number for ") + what);
  return j.get<double>();
}

double number_field(const Json& j, const char* name) { return number(field(j, name), name); }

bool bool_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_boolean()) parse_error(std::string("expected a boolean for ") + name);
  return v.get<bool>();
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) parse_error(std::string("expected an integer for ") + name);
  return v.get<int>();
}

Json point(Vec2 p) { return Json::array({p.x, p.y}); }

Vec2 point_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) parse_error("expected a point [x, y]");
  return {number(j[0], "x"), number(j[1], "y")};
}

Json points(const std::vector<Vec2>& pts) {
  Json out = Json::array();
  for (Vec2 p : pts) out.push_back(point(p));
  return out;
}

std::vector<Vec2> points_from(const Json& j) {
  if (!j.is_array()) parse_error("expected an array of points");
  std::vector<Vec2> out;
  out.reserve(j.size());
  for (const Json& p : j) out.push_back(point_from(p));
  return out;
}

Json sym(SymMat2 m) { return Json::array({m.m11, m.m12, m.m22}); }

SymMat2 sym_from(const Json& j, const char* name) {
  if (!j.is_array()) parse_error(std::string("matrix ") + name + " must be an array");
  SymMat2 m;
  if (j.size() == 3 && j[0].is_number()) {
    m = {number(j[0], name), number(j[1], name), number(j[2], name)};
  } else if (j.size() == 2 && j[0].is_array() && j[1].is_array() && j[0].size() == 2 &&
             j[1].size() == 2) {
    const double a12 = number(j[0][1], name);
    const double a21 = number(j[1][0], name);
    if (a12 != a21) {
      parse_error(std::string("matrix ") + name + " is not symmetric; symmetrize it explicitly");
    }
    m = {number(j[0][0], name), a12, number(j[1][1], name)};
  } else {
    parse_error(std::string("matrix ") + name + " must be [m11, m12, m22] or a 2x2 array");
  }
  if (!m.is_finite()) throw Error(ErrorCode::NonFiniteInput, std::string("matrix ") + name);
  return m;
}

Json collision(const std::optional<CollisionPair>& pair) {
  if (!pair) return nullptr;
  return {{"p", point(pair->p)},
          {"q", point(pair->q)},
          {"image_distance", pair->image_distance},
          {"domain_distance", pair->domain_distance}};
}

std::optional<CollisionPair> collision_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return CollisionPair{point_from(field(j, "p")), point_from(field(j, "q")),
                       number_field(j, "image_distance"), number_field(j, "domain_distance")};
}

Json signs(const SignCounts& s) {
  return {{"positive_count", s.positive},
          {"negative_count", s.negative},
          {"near_zero_count", s.near_zero}};
}

SignCounts signs_from(const Json& j) {
  return {int_field(j, "positive_count"), int_field(j, "negative_count"),
          int_field(j, "near_zero_count")};
}

CertificateSet rkc_certificates_from(const Json& j) {
  CertificateSet c;
  c.boundary_simple = bool_field(j, "boundary_simple");
  c.boundary_convex = bool_field(j, "boundary_convex");
  const Json& s = field(j, "strip_violation");
  c.strip = {number_field(s, "w1"),
             number_field(s, "bound"),
             bool_field(s, "violated"),
             bool_field(s, "boundary_in_strip"),
             number_field(s, "boundary_w1_min"),
             number_field(s, "boundary_w1_max")};
  c.jacobian_center_zero = bool_field(j, "jacobian_center_zero");
  c.jacobian_formula_error = number_field(j, "jacobian_formula_error");
  c.jacobian_signs = signs_from(field(j, "jacobian_sign_change"));
  c.fold_pair = collision_from(field(j, "fold_pair"));
  return c;
}

LewyCertificates lewy_certificates_from(const Json& j) {
  LewyCertificates c;
  c.center_jacobian_zero = bool_field(j, "center_jacobian_zero");
  c.punctured_positivity = bool_field(j, "punctured_positivity");
  c.punctured_signs = signs_from(field(j, "punctured_signs"));
  c.ineq_b = number_field(j, "ineq_b");
  c.ineq_d = number_field(j, "ineq_d");
  c.inequalities_ok = bool_field(j, "inequalities_ok");
  c.homeomorphism.boundary_simple = bool_field(j, "boundary_simple");
  c.homeomorphism.winding_ok = bool_field(j, "winding_ok");
  c.homeomorphism.probes = int_field(j, "probes");
  c.homeomorphism.winding_min = int_field(j, "winding_min");
  c.homeomorphism.winding_max = int_field(j, "winding_max");
  c.homeomorphism.grid_injective = bool_field(j, "grid_injective");
  return c;
}

}  // namespace

Json to_json(const EllipticSystem& s) {
  return {{"A", sym(s.A)}, {"B", sym(s.B)}, {"C", sym(s.C)}, {"D", sym(s.D)}};
}

EllipticSystem system_from_json(const Json& j) {
  return {sym_from(field(j, "A"), "A"), sym_from(field(j, "B"), "B"), sym_from(field(j, "C"), "C"),
          sym_from(field(j, "D"), "D")};
}

Json to_json(const BivariatePoly& poly) {
  Json out = Json::array();
  for (const auto& t : poly.terms()) out.push_back(Json::array({t.i, t.j, t.coeff}));
  return out;
}

BivariatePoly poly_from_json(const Json& j) {
  if (!j.is_array()) parse_error("polynomial must be an array of [i, j, coefficient]");
  std::vector<BivariatePoly::Term> terms;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer()) {
      parse_error("polynomial term must be [i, j, coefficient]");
    }
    terms.push_back({t[0].get<int>(), t[1].get<int>(), number(t[2], "coefficient")});
  }
  return BivariatePoly::from_terms(terms);
}

Json to_json(const PlanarPolyMap& map) { return {{"u1", to_json(map.u1)}, {"u2", to_json(map.u2)}}; }

PlanarPolyMap map_from_json(const Json& j) {
  return {poly_from_json(field(j, "u1")), poly_from_json(field(j, "u2"))};
}

Json to_json(const EllipticityVerdict& v) {
  Json out = {{"elliptic", v.elliptic},
              {"margin", v.margin},
              {"lipschitz", v.lipschitz},
              {"certified_lower_bound", v.certified_lower_bound},
              {"witness", nullptr}};
  if (v.witness) out["witness"] = {{"xi_angle", v.witness->first}, {"eta_angle", v.witness->second}};
  return out;
}

Json to_json(const ClassificationResult& r) {
  Json out = {{"variant", r.diagonalizable() ? "Diagonalizable" : "NotDiagonalizable"},
              {"sigma", {{"B", r.sigma_b}, {"C", r.sigma_c}, {"D", r.sigma_d}}},
              {"residuals", {{"B", r.residuals[0]}, {"C", r.residuals[1]}, {"D", r.residuals[2]}}}};
  if (r.diagonalizable()) {
    out["mixing"] = Json::array({r.mixing.alpha, r.mixing.beta, r.mixing.gamma, r.mixing.delta});
    out["base"] = sym(r.base);
  }
  return out;
}

Json to_json(const QuadraticSolution& s) {
  return {{"theta", s.theta},
          {"p", Json::array({s.a, s.b, s.c})},
          {"residual_norm", s.residual_norm},
          {"sigma_min", s.sigma_min}};
}

Json to_json(const CubicSolution& s) {
  return {{"theta", s.theta},
          {"q", Json::array({s.a, s.b, s.c, s.d})},
          {"residual_norm", s.residual_norm},
          {"sigma_min", s.sigma_min}};
}

Json to_json(const CertificateSet& c) {
  return {{"boundary_simple", c.boundary_simple},
          {"boundary_convex", c.boundary_convex},
          {"strip_violation",
           {{"w1", c.strip.w1},
            {"bound", c.strip.bound},
            {"violated", c.strip.violated},
            {"boundary_in_strip", c.strip.boundary_in_strip},
            {"boundary_w1_min", c.strip.boundary_w1_min},
            {"boundary_w1_max", c.strip.boundary_w1_max}}},
          {"jacobian_center_zero", c.jacobian_center_zero},
          {"jacobian_formula_error", c.jacobian_formula_error},
          {"jacobian_sign_change", signs(c.jacobian_signs)},
          {"fold_pair", collision(c.fold_pair)},
          {"all_pass", c.all_pass()}};
}

Json to_json(const LewyCertificates& c) {
  return {{"center_jacobian_zero", c.center_jacobian_zero},
          {"punctured_positivity", c.punctured_positivity},
          {"punctured_signs", signs(c.punctured_signs)},
          {"ineq_b", c.ineq_b},
          {"ineq_d", c.ineq_d},
          {"inequalities_ok", c.inequalities_ok},
          {"boundary_simple", c.homeomorphism.boundary_simple},
          {"winding_ok", c.homeomorphism.winding_ok},
          {"probes", c.homeomorphism.probes},
          {"winding_min", c.homeomorphism.winding_min},
          {"winding_max", c.homeomorphism.winding_max},
          {"grid_injective", c.homeomorphism.grid_injective},
          {"all_pass", c.all_pass()}};
}

Json to_json(const RkcBundle& b) {
  Json out = {{"kind", "rkc"}, {"system", to_json(b.system)}};
  out.update(to_json(b.solution));
  out["k"] = b.k;
  out["disk"] = {{"center", point(b.disk.center)}, {"radius", b.disk.radius}};
  out["N"] = b.options.boundary_samples;
  out["sign_grid"] = b.options.sign_grid;
  out["fold_grid"] = b.options.fold_grid;
  out["map"] = to_json(b.map);
  out["boundary_samples"] = points(b.boundary_samples);
  out["certificates"] = to_json(b.certificates);
  return out;
}

RkcBundle rkc_bundle_from_json(const Json& j) {
  if (!j.is_object() || j.value("kind", "") != "rkc") parse_error("not an rkc bundle");
  RkcBundle b;
  b.system = system_from_json(field(j, "system"));
  b.solution.theta = number_field(j, "theta");
  const Json& p = field(j, "p");
  if (!p.is_array() || p.size() != 3) parse_error("p must be [a, b, c]");
  b.solution.a = number(p[0], "a");
  b.solution.b = number(p[1], "b");
  b.solution.c = number(p[2], "c");
  b.solution.residual_norm = number_field(j, "residual_norm");
  b.solution.sigma_min = j.contains("sigma_min") ? number_field(j, "sigma_min") : 0.0;
  b.k = number_field(j, "k");
  const Json& disk = field(j, "disk");
  b.disk = Disk(point_from(field(disk, "center")), number_field(disk, "radius"));
  b.options.boundary_samples = int_field(j, "N");
  if (j.contains("sign_grid")) b.options.sign_grid = int_field(j, "sign_grid");
  if (j.contains("fold_grid")) b.options.fold_grid = int_field(j, "fold_grid");
  b.map = map_from_json(field(j, "map"));
  b.boundary_samples = points_from(field(j, "boundary_samples"));
  b.certificates = rkc_certificates_from(field(j, "certificates"));
  return b;
}

Json to_json(const LewyBundle& b) {
  Json out = {{"kind", "lewy"}, {"system", to_json(b.system)}};
  out.update(to_json(b.solution));
  out["r"] = b.r;
  out["rho"] = b.rho;
  out["rho_inequality"] =
      std::isfinite(b.rho_inequality) ? Json(b.rho_inequality) : Json(nullptr);
  out["N"] = b.options.boundary_samples;
  out["n_probe"] = b.options.n_probe;
  out["positivity_grid"] = b.options.positivity_grid;
  out["seed"] = b.options.seed;
  out["map"] = to_json(b.map);
  out["boundary_samples"] = points(b.boundary_samples);
  out["certificates"] = to_json(b.certificates);
  return out;
}

LewyBundle lewy_bundle_from_json(const Json& j) {
  if (!j.is_object() || j.value("kind", "") != "lewy") parse_error("not a lewy bundle");
  LewyBundle b;
  b.system = system_from_json(field(j, "system"));
  b.solution.theta = number_field(j, "theta");
  const Json& q = field(j, "q");
  if (!q.is_array() || q.size() != 4) parse_error("q must be [a, b, c, d]");
  b.solution.a = number(q[0], "a");
  b.solution.b = number(q[1], "b");
  b.solution.c = number(q[2], "c");
  b.solution.d = number(q[3], "d");
  b.solution.residual_norm = number_field(j, "residual_norm");
  b.solution.sigma_min = j.contains("sigma_min") ? number_field(j, "sigma_min") : 0.0;
  b.r = number_field(j, "r");
  b.rho = number_field(j, "rho");
  const Json& ri = field(j, "rho_inequality");
  b.rho_inequality = ri.is_null() ? std::numeric_limits<double>::infinity() : number(ri, "rho_inequality");
  b.options.boundary_samples = int_field(j, "N");
  b.options.n_probe = int_field(j, "n_probe");
  b.options.positivity_grid = int_field(j, "positivity_grid");
  const Json& seed = field(j, "seed");
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) parse_error("seed must be an integer");
  b.options.seed = seed.get<std::uint64_t>();
  b.map = map_from_json(field(j, "map"));
  b.boundary_samples = points_from(field(j, "boundary_samples"));
  b.certificates = lewy_certificates_from(field(j, "certificates"));
  return b;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::string polyline_csv(const std::vector<Vec2>& vertices) {
  std::ostringstream out;
  out.precision(17);
  for (Vec2 v : vertices) out << v.x << ',' << v.y << '\n';
  return out.str();
}

std::vector<Vec2> polyline_from_csv(const std::string& text) {
  std::vector<Vec2> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) parse_error("CSV row without comma: " + line);
    try {
      out.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
    } catch (const std::exception&) {
      parse_error("bad CSV row: " + line);
    }
  }
  return out;
}

namespace {

double max_map_difference(const PlanarPolyMap& a, const PlanarPolyMap& b) {
  return std::max((a.u1 - b.u1).max_abs_coeff(), (a.u2 - b.u2).max_abs_coeff());
}

void compare_flag(VerifyReport& report, const char* name, bool stored, bool recomputed) {
  if (stored != recomputed) {
    report.fail(std::string(name) + ": stored " + (stored ? "true" : "false") + ", recomputed " +
                (recomputed ? "true" : "false"));
  }
}

}  // namespace

VerifyReport verify_bundle(const RkcBundle& stored) {
  VerifyReport report;
  const QuadraticSolution& s = stored.solution;
  if (!(stored.k != 0.0 && stored.k >= std::abs(s.b))) {
    report.fail("k = " + std::to_string(stored.k) + " violates k >= |b| = " +
                std::to_string(std::abs(s.b)));
  }
  const double scale = 1.0 + stored.map.max_abs_coeff();
  if (max_map_difference(stored.map, rkc_map(s, stored.k)) > 1e-12 * scale) {
    report.fail("map does not match R_theta (x^2 + y^2 - 1, k y + p)");
  }
  if (relative_residual(stored.system, stored.map) > kResidualTolerance) {
    report.fail("map does not solve the system");
  }
  if (stored.boundary_samples.size() != static_cast<std::size_t>(stored.options.boundary_samples)) {
    report.fail("boundary sample count differs from N");
  } else {
    const auto fresh = rkc_boundary(s, stored.k, stored.options.boundary_samples);
    double worst = 0.0;
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      worst = std::max(worst, distance(fresh[i], stored.boundary_samples[i]));
    }
    if (worst > 1e-9 * scale) report.fail("boundary samples do not match Phi on dB");
  }
  // Every sampled boundary point must satisfy x = -1 + x^2 + y^2.
  const Disk disk = rkc_disk();
  for (int i = 0; i < 16; ++i) {
    const double t = 2.0 * std::numbers::pi * i / 16;
    const double x = disk.center.x + disk.radius * std::cos(t);
    const double y = disk.radius * std::sin(t);
    if (std::abs(x - (-1.0 + x * x + y * y)) > 1e-12) {
      report.fail("boundary identity x = -1 + x^2 + y^2 fails");
      break;
    }
  }

  CertificateSet fresh;
  try {
    fresh = compute_rkc_certificates(stored, stored.options);
  } catch (const Error& e) {
    report.fail(std::string("recomputing certificates failed: ") + e.what());
    return report;
  }
  const CertificateSet& old = stored.certificates;
  compare_flag(report, "boundary_simple", old.boundary_simple, fresh.boundary_simple);
  compare_flag(report, "boundary_convex", old.boundary_convex, fresh.boundary_convex);
  compare_flag(report, "strip.violated", old.strip.violated, fresh.strip.violated);
  compare_flag(report, "strip.boundary_in_strip", old.strip.boundary_in_strip,
               fresh.strip.boundary_in_strip);
  compare_flag(report, "jacobian_center_zero", old.jacobian_center_zero, fresh.jacobian_center_zero);
  compare_flag(report, "fold_pair", old.fold_pair.has_value(), fresh.fold_pair.has_value());
  if (!fresh.all_pass()) report.fail("recomputed certificates do not all pass");
  return report;
}

VerifyReport verify_bundle(const LewyBundle& stored) {
  VerifyReport report;
  const CubicSolution& s = stored.solution;
  const double scale = 1.0 + stored.map.max_abs_coeff();
  if (max_map_difference(stored.map, lewy_map(s)) > 1e-12 * scale) {
    report.fail("map does not match R_theta (x (x^2 + y^2), y + q)");
  }
  if (relative_residual(stored.system, stored.map) > kResidualTolerance) {
    report.fail("map does not solve the system");
  }
  if (!(stored.rho > 0.0 && stored.rho < stored.r)) report.fail("rho must satisfy 0 < rho < r");
  const double rho2 = stored.rho * stored.rho;
  if (!(2.0 + s.b * rho2 > 0.0 && 3.0 + s.d * rho2 > 0.0)) {
    report.fail("2 + b rho^2 > 0 and 3 + d rho^2 > 0 do not both hold");
  }
  if (stored.boundary_samples.size() != static_cast<std::size_t>(stored.options.boundary_samples)) {
    report.fail("boundary sample count differs from N");
  } else {
    const auto fresh = circle_image(as_planar_map(stored.map), {0.0, 0.0}, stored.rho,
                                    stored.options.boundary_samples);
    double worst = 0.0;
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      worst = std::max(worst, distance(fresh[i], stored.boundary_samples[i]));
    }
    if (worst > 1e-9 * scale) report.fail("boundary samples do not match u on the circle");
  }

  LewyCertificates fresh;
  try {
    fresh = compute_lewy_certificates(stored, stored.options);
  } catch (const Error& e) {
    report.fail(std::string("recomputing certificates failed: ") + e.what());
    return report;
  }
  const LewyCertificates& old = stored.certificates;
  compare_flag(report, "center_jacobian_zero", old.center_jacobian_zero, fresh.center_jacobian_zero);
  compare_flag(report, "punctured_positivity", old.punctured_positivity, fresh.punctured_positivity);
  compare_flag(report, "inequalities_ok", old.inequalities_ok, fresh.inequalities_ok);
  compare_flag(report, "boundary_simple", old.homeomorphism.boundary_simple,
               fresh.homeomorphism.boundary_simple);
  compare_flag(report, "winding_ok", old.homeomorphism.winding_ok, fresh.homeomorphism.winding_ok);
  compare_flag(report, "grid_injective", old.homeomorphism.grid_injective,
               fresh.homeomorphism.grid_injective);
  if (!fresh.all_pass()) report.fail("recomputed certificates do not all pass");
  return report;
}

}  // namespace interpen
