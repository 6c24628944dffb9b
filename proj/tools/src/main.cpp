#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "interpen/algebra.hpp"
#include "interpen/error.hpp"
#include "interpen/harmonic.hpp"
#include "interpen/lewy.hpp"
#include "interpen/render.hpp"
#include "interpen/rkc.hpp"
#include "interpen/serialize.hpp"
#include "interpen/synthesis.hpp"

namespace {

using interpen::Error;
using interpen::ErrorCode;
using interpen::Json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCertificate = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Correctly rounded decimal to double conversion.
double parse_real(const std::string& flag, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE) {
    throw UsageError(flag + " expects a real number, got '" + text + "'");
  }
  return value;
}

std::optional<double> parse_real(const std::string& flag, const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return parse_real(flag, *text);
}

struct SystemSource {
  std::string path;
  std::optional<std::string> mu;
  std::optional<std::string> lambda;

  void attach(CLI::App* cmd) {
    cmd->add_option("--system", path, "System JSON file (default: read standard input)");
    cmd->add_option("--mu", mu, "Lame parameter mu");
    cmd->add_option("--lambda", lambda, "Lame parameter lambda");
  }

  [[nodiscard]] interpen::EllipticSystem load() const {
    const bool lame_given = mu.has_value() || lambda.has_value();
    if (lame_given && !path.empty()) throw UsageError("give either --system or --mu/--lambda");
    if (lame_given) {
      if (!mu || !lambda) throw UsageError("--mu and --lambda must be given together");
      return interpen::lame(parse_real("--mu", *mu), parse_real("--lambda", *lambda));
    }
    Json j;
    if (!path.empty()) {
      j = interpen::read_json_file(path);
    } else {
      const std::string text(std::istreambuf_iterator<char>(std::cin), {});
      try {
        j = Json::parse(text);
      } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("standard input: ") + e.what());
      }
    }
    if (j.is_object() && j.contains("system")) return interpen::system_from_json(j.at("system"));
    return interpen::system_from_json(j);
  }
};

std::uint64_t seed_from_environment() {
  const char* raw = std::getenv("INTERPEN_SEED");
  if (raw == nullptr || *raw == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(raw, &used);
    if (raw[used] != '\0') throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string("INTERPEN_SEED is not an unsigned integer: ") + raw);
  }
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json report_json(const interpen::VerifyReport& report) {
  return {{"passed", report.passed}, {"failures", report.failures}};
}

std::vector<interpen::Vec2> default_quadrilateral() {
  return {{1.0, 0.0}, {0.2, 0.9}, {-1.0, 0.3}, {-0.3, -0.8}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar elliptic systems: classification and counterexample certificates"};
  app.require_subcommand(1);

  std::string lame_mu;
  std::string lame_lambda;
  auto* lame_cmd = app.add_subcommand("lame", "Print the Lame system as JSON");
  lame_cmd->add_option("--mu", lame_mu, "Shear modulus mu > 0")->required();
  lame_cmd->add_option("--lambda", lame_lambda, "First Lame parameter, mu + lambda > 0")->required();

  SystemSource classify_src;
  auto* classify_cmd = app.add_subcommand("classify", "Ellipticity and diagonalizability");
  classify_src.attach(classify_cmd);

  SystemSource synth_src;
  int degree = 2;
  auto* synth_cmd = app.add_subcommand("synthesize", "Solve for the quadratic or cubic solution");
  synth_src.attach(synth_cmd);
  synth_cmd->add_option("--degree", degree, "2 or 3")->check(CLI::IsMember({2, 3}));

  SystemSource rkc_src;
  std::optional<std::string> rkc_k;
  interpen::RkcOptions rkc_opts;
  std::string rkc_out;
  auto* rkc_cmd = app.add_subcommand("rkc", "Build the quadratic counterexample bundle");
  rkc_src.attach(rkc_cmd);
  rkc_cmd->add_option("--k", rkc_k, "Stretch constant, k >= |b|");
  rkc_cmd->add_option("--n", rkc_opts.boundary_samples, "Boundary samples")
      ->check(CLI::Range(8, 1 << 20));
  rkc_cmd->add_option("--sign-grid", rkc_opts.sign_grid, "Sign-field grid")->check(CLI::Range(4, 4000));
  rkc_cmd->add_option("--fold-grid", rkc_opts.fold_grid, "Fold lattice")->check(CLI::Range(16, 4000));
  rkc_cmd->add_option("--out", rkc_out, "Write the bundle here instead of standard output");

  SystemSource lewy_src;
  interpen::LewyOptions lewy_opts;
  std::optional<std::uint64_t> lewy_seed;
  std::string lewy_out;
  auto* lewy_cmd = app.add_subcommand("lewy", "Build the cubic counterexample bundle");
  lewy_src.attach(lewy_cmd);
  lewy_cmd->add_option("--n", lewy_opts.boundary_samples, "Boundary samples")
      ->check(CLI::Range(8, 1 << 20));
  lewy_cmd->add_option("--probes", lewy_opts.n_probe, "Winding probes and grid resolution")
      ->check(CLI::Range(16, 4000));
  lewy_cmd->add_option("--seed", lewy_seed, "Probe seed (default: INTERPEN_SEED or 0)");
  lewy_cmd->add_option("--out", lewy_out, "Write the bundle here instead of standard output");

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "Recompute and check a stored bundle");
  verify_cmd->add_option("--bundle", verify_path, "Bundle JSON")->required();

  std::string render_bundle;
  int figure = 1;
  std::string render_out;
  std::vector<double> radii;
  auto* render_cmd = app.add_subcommand("render", "Write a figure as SVG");
  render_cmd->add_option("--bundle", render_bundle, "rkc bundle JSON")->required();
  render_cmd->add_option("--figure", figure, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  render_cmd->add_option("--out", render_out, "SVG path")->required();
  render_cmd->add_option("--radii", radii, "Circle radii for figure 2");

  std::string demo_config;
  int demo_grid = 200;
  auto* demo_cmd = app.add_subcommand("harmonic-demo", "Harmonic extension of convex boundary data");
  demo_cmd->add_option("--config", demo_config, "JSON with \"vertices\": [[x, y], ...]");
  demo_cmd->add_option("--grid", demo_grid, "Injectivity grid")->check(CLI::Range(16, 2000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*lame_cmd) {
      print(interpen::to_json(
          interpen::lame(parse_real("--mu", lame_mu), parse_real("--lambda", lame_lambda))));
      return kExitOk;
    }
    if (*classify_cmd) {
      const auto system = classify_src.load();
      const auto verdict = interpen::is_elliptic(system);
      Json out = {{"ellipticity", interpen::to_json(verdict)},
                  {"strongly_convex", interpen::is_strongly_convex(system)}};
      if (verdict.elliptic) {
        out.update(interpen::to_json(interpen::classify(system)));
      } else {
        out["variant"] = "NotElliptic";
      }
      print(out);
      return kExitOk;
    }
    if (*synth_cmd) {
      const auto system = synth_src.load();
      Json out;
      if (degree == 2) {
        const auto sol = interpen::synthesize_quadratic(system);
        out = interpen::to_json(sol);
        out["map"] = interpen::to_json(interpen::quadratic_map(sol));
      } else {
        const auto sol = interpen::synthesize_cubic(system);
        out = interpen::to_json(sol);
        out["map"] = interpen::to_json(interpen::cubic_map(sol));
      }
      out["degree"] = degree;
      print(out);
      return kExitOk;
    }
    if (*rkc_cmd) {
      const auto bundle = interpen::build_rkc_counterexample(rkc_src.load(), parse_real("--k", rkc_k),
                                                           rkc_opts);
      const Json j = interpen::to_json(bundle);
      if (rkc_out.empty()) {
        print(j);
      } else {
        interpen::write_text_file(rkc_out, j.dump(1) + "\n");
        print({{"out", rkc_out}, {"k", bundle.k}, {"certificates", j.at("certificates")}});
      }
      return bundle.certificates.all_pass() ? kExitOk : kExitCertificate;
    }
    if (*lewy_cmd) {
      lewy_opts.seed = lewy_seed ? *lewy_seed : seed_from_environment();
      const auto bundle = interpen::build_lewy_counterexample(lewy_src.load(), lewy_opts);
      const Json j = interpen::to_json(bundle);
      if (lewy_out.empty()) {
        print(j);
      } else {
        interpen::write_text_file(lewy_out, j.dump(1) + "\n");
        print({{"out", lewy_out}, {"rho", bundle.rho}, {"certificates", j.at("certificates")}});
      }
      return bundle.certificates.all_pass() ? kExitOk : kExitCertificate;
    }
    if (*verify_cmd) {
      const Json j = interpen::read_json_file(verify_path);
      const std::string kind = j.is_object() ? j.value("kind", "") : "";
      interpen::VerifyReport report;
      if (kind == "rkc") {
        report = interpen::verify_bundle(interpen::rkc_bundle_from_json(j));
      } else if (kind == "lewy") {
        report = interpen::verify_bundle(interpen::lewy_bundle_from_json(j));
      } else {
        throw Error(ErrorCode::ParseError, "bundle kind must be \"rkc\" or \"lewy\"");
      }
      Json out = report_json(report);
      out["kind"] = kind;
      print(out);
      return report.passed ? kExitOk : kExitCertificate;
    }
    if (*render_cmd) {
      const auto bundle = interpen::rkc_bundle_from_json(interpen::read_json_file(render_bundle));
      if (figure == 1) {
        interpen::render_figure1(bundle, render_out);
        print({{"figure", 1}, {"out", render_out}});
      } else {
        if (radii.empty()) radii = interpen::default_figure2_radii();
        interpen::render_figure2(bundle, radii, render_out);
        print({{"figure", 2}, {"out", render_out}, {"radii", radii}});
      }
      return kExitOk;
    }
    if (*demo_cmd) {
      std::vector<interpen::Vec2> vertices = default_quadrilateral();
      if (!demo_config.empty()) {
        const Json cfg = interpen::read_json_file(demo_config);
        if (!cfg.is_object() || !cfg.contains("vertices") || !cfg.at("vertices").is_array()) {
          throw Error(ErrorCode::ParseError, "config needs a \"vertices\" array");
        }
        vertices.clear();
        for (const Json& v : cfg.at("vertices")) {
          if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
            throw Error(ErrorCode::ParseError, "vertex must be [x, y]");
          }
          vertices.push_back({v[0].get<double>(), v[1].get<double>()});
        }
      }
      const auto boundary = interpen::BoundaryMap::polygon(vertices, 1024);
      const auto result = interpen::rkc_demo(boundary, demo_grid);
      Json out = {{"boundary_convex", result.boundary_convex},
                  {"grid", demo_grid},
                  {"injective", result.verdict.injective},
                  {"rejected_candidates", result.verdict.rejected_candidates}};
      if (result.verdict.collision) {
        const auto& c = *result.verdict.collision;
        out["collision"] = {{"p", {c.p.x, c.p.y}}, {"q", {c.q.x, c.q.y}}};
      }
      print(out);
      return result.verdict.injective ? kExitOk : kExitCertificate;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    print({{"error", interpen::to_string(e.code())}, {"message", e.what()}});
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}
