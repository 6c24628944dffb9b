#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "interpen/rkc.hpp"

namespace interpen {

inline constexpr int kFigureCircleSamples = 720;

// Six radii geometrically spaced inside B for circles centred at the origin.
[[nodiscard]] std::vector<double> default_figure2_radii(int count = 6);

// Left: dB. Right: Phi(dB), with independently scaled axes.
[[nodiscard]] std::string figure1_svg(const RkcBundle& bundle);

// Left: circles C_r about the origin and the nodal branch of det Du in B. Right: u(C_r).
// Throws ParameterOutOfRange unless every circle lies inside B.
[[nodiscard]] std::string figure2_svg(const RkcBundle& bundle, const std::vector<double>& radii);

void render_figure1(const RkcBundle& bundle, const std::filesystem::path& out);
void render_figure2(const RkcBundle& bundle, const std::vector<double>& radii,
                    const std::filesystem::path& out);

}  // namespace interpen
