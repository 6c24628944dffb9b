#include "interpen/lewy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "interpen/error.hpp"

namespace interpen {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_from(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

bool positive_on_punctured_grid(const BivariatePoly& det, double r) {
  constexpr int kAngles = 720;
  constexpr int kRadii = 50;
  for (int i = 1; i <= kRadii; ++i) {
    const double rad = r * i / kRadii;
    for (int j = 0; j < kAngles; ++j) {
      const double t = 2.0 * std::numbers::pi * j / kAngles;
      if (!(det(rad * std::cos(t), rad * std::sin(t)) > 0.0)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Vec2> probe_points(const Disk& disk, int count, std::uint64_t seed,
                               double radius_fraction) {
  // Plastic-number recurrence; the seed only shifts the starting offset.
  constexpr double g = 1.32471795724474602596;
  constexpr double a1 = 1.0 / g;
  constexpr double a2 = 1.0 / (g * g);
  std::uint64_t state = seed;
  const double o1 = unit_from(splitmix64(state));
  const double o2 = unit_from(splitmix64(state));
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 1; i <= count; ++i) {
    const double u = std::fmod(o1 + a1 * i, 1.0);
    const double v = std::fmod(o2 + a2 * i, 1.0);
    const double r = radius_fraction * disk.radius * std::sqrt(u);
    const double t = 2.0 * std::numbers::pi * v;
    out.push_back(disk.center + Vec2{r * std::cos(t), r * std::sin(t)});
  }
  return out;
}

PlanarPolyMap lewy_map(const CubicSolution& sol) {
  const BivariatePoly first = BivariatePoly::monomial(3, 0) + BivariatePoly::monomial(1, 2);
  const BivariatePoly second = BivariatePoly::y() + cubic_poly(sol.a, sol.b, sol.c, sol.d);
  return rotate({first, second}, sol.theta);
}

double find_positivity_radius(const PlanarPolyMap& map) {
  const BivariatePoly det = jacobian_det(map);
  double r = 1.0;
  for (int step = 0; step < 200; ++step, r *= 0.9) {
    if (positive_on_punctured_grid(det, r)) return 0.9 * r;
  }
  throw Error(ErrorCode::NoPositiveRadius,
              "det Du is not positive on any punctured disk of the schedule");
}

double inequality_radius(double b, double d) {
  double rho = std::numeric_limits<double>::infinity();
  if (b < 0.0) rho = std::min(rho, std::sqrt(-2.0 / b));
  if (d < 0.0) rho = std::min(rho, std::sqrt(-3.0 / d));
  return rho;
}

HomeomorphismCertificate homeomorphism_certificate(const PlanarPolyMap& map, const Disk& disk,
                                                   const std::vector<Vec2>& boundary, int n_probe,
                                                   std::uint64_t seed) {
  HomeomorphismCertificate cert;
  try {
    const ClosedPolyline curve(boundary);
    cert.boundary_simple = is_simple_closed(curve);

    const std::vector<Vec2> probes = probe_points(disk, n_probe, seed);
    cert.probes = static_cast<int>(probes.size());
    cert.winding_min = std::numeric_limits<int>::max();
    cert.winding_max = std::numeric_limits<int>::min();
    bool ok = !probes.empty();
    for (Vec2 p : probes) {
      int w = 0;
      try {
        w = winding_number(curve, evaluate(map, p));
      } catch (const Error&) {
        ok = false;
        continue;
      }
      cert.winding_min = std::min(cert.winding_min, w);
      cert.winding_max = std::max(cert.winding_max, w);
      ok = ok && w == 1;
    }
    cert.winding_ok = ok;
  } catch (const Error&) {
    cert.boundary_simple = false;
    cert.winding_ok = false;
  }
  cert.grid_injective = grid_injectivity(map, disk, std::max(n_probe, 16)).injective;
  return cert;
}

HomeomorphismCertificate homeomorphism_certificate(const LewyBundle& bundle, int n_probe,
                                                   std::uint64_t seed) {
  return homeomorphism_certificate(bundle.map, bundle.disk(), bundle.boundary_samples, n_probe,
                                   seed);
}

LewyCertificates compute_lewy_certificates(const LewyBundle& bundle, const LewyOptions& options) {
  LewyCertificates cert;
  const BivariatePoly det = jacobian_det(bundle.map);
  cert.center_jacobian_zero = det.coeff(0, 0) == 0.0;

  cert.punctured_signs = jacobian_sign_field(bundle.map, bundle.disk(), options.positivity_grid);
  cert.punctured_positivity =
      cert.punctured_signs.negative == 0 && cert.punctured_signs.near_zero == 0;

  const double rho2 = bundle.rho * bundle.rho;
  cert.ineq_b = 2.0 + bundle.solution.b * rho2;
  cert.ineq_d = 3.0 + bundle.solution.d * rho2;
  cert.inequalities_ok = cert.ineq_b >= 0.1 * 2.0 && cert.ineq_d >= 0.1 * 3.0 &&
                         bundle.rho > 0.0 && bundle.rho < bundle.r;

  cert.homeomorphism = homeomorphism_certificate(bundle, options.n_probe, options.seed);
  return cert;
}

LewyBundle build_lewy_counterexample(const EllipticSystem& system, const LewyOptions& options) {
  LewyBundle bundle;
  bundle.system = system;
  bundle.solution = synthesize_cubic(system);
  bundle.map = lewy_map(bundle.solution);
  bundle.r = find_positivity_radius(bundle.map);
  bundle.rho_inequality = inequality_radius(bundle.solution.b, bundle.solution.d);
  bundle.rho = 0.9 * std::min(bundle.r, bundle.rho_inequality);
  bundle.options = options;
  bundle.boundary_samples =
      circle_image(as_planar_map(bundle.map), {0.0, 0.0}, bundle.rho, options.boundary_samples);
  bundle.certificates = compute_lewy_certificates(bundle, options);
  return bundle;
}

}  // namespace interpen
