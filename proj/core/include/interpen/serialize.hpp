#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "interpen/algebra.hpp"
#include "interpen/lewy.hpp"
#include "interpen/poly.hpp"
#include "interpen/rkc.hpp"

namespace interpen {

using Json = nlohmann::json;

// {"A": [a11, a12, a22], ...}; a symmetric 2x2 nested array is also accepted, an asymmetric one
// is rejected with ParseError.
[[nodiscard]] Json to_json(const EllipticSystem& system);
[[nodiscard]] EllipticSystem system_from_json(const Json& j);

// [[i, j, coefficient], ...]
[[nodiscard]] Json to_json(const BivariatePoly& poly);
[[nodiscard]] BivariatePoly poly_from_json(const Json& j);

[[nodiscard]] Json to_json(const PlanarPolyMap& map);
[[nodiscard]] PlanarPolyMap map_from_json(const Json& j);

[[nodiscard]] Json to_json(const EllipticityVerdict& verdict);
[[nodiscard]] Json to_json(const ClassificationResult& result);
[[nodiscard]] Json to_json(const QuadraticSolution& sol);
[[nodiscard]] Json to_json(const CubicSolution& sol);

[[nodiscard]] Json to_json(const CertificateSet& cert);
[[nodiscard]] Json to_json(const LewyCertificates& cert);

[[nodiscard]] Json to_json(const RkcBundle& bundle);
[[nodiscard]] RkcBundle rkc_bundle_from_json(const Json& j);
[[nodiscard]] Json to_json(const LewyBundle& bundle);
[[nodiscard]] LewyBundle lewy_bundle_from_json(const Json& j);

// Throws IoError / ParseError.
[[nodiscard]] Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// One "x,y" row per vertex, no header.
[[nodiscard]] std::string polyline_csv(const std::vector<Vec2>& vertices);
[[nodiscard]] std::vector<Vec2> polyline_from_csv(const std::string& text);

struct VerifyReport {
  bool passed = true;
  std::vector<std::string> failures;

  void fail(std::string what) {
    passed = false;
    failures.push_back(std::move(what));
  }
};

// Re-derives the map and every certificate of a stored bundle and compares against the stored
// values; any failed certificate, broken invariant or mismatch is reported.
[[nodiscard]] VerifyReport verify_bundle(const RkcBundle& stored);
[[nodiscard]] VerifyReport verify_bundle(const LewyBundle& stored);

}  // namespace interpen
