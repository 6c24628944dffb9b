#include "interpen/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "interpen/error.hpp"
#include "interpen/serialize.hpp"

namespace interpen {

namespace {

constexpr double kPanelSize = 360.0;
constexpr double kMargin = 40.0;
constexpr double kWidth = 2.0 * kPanelSize + 3.0 * kMargin;
constexpr double kHeight = kPanelSize + 2.0 * kMargin;

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c",
                                                 "#9467bd", "#ff7f0e", "#17becf"};

std::string fmt(double v) {
  std::array<char, 48> buf{};
  std::snprintf(buf.data(), buf.size(), "%.3f", v);
  std::string s(buf.data());
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Box {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  void add(Vec2 p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }

  void pad(double fraction) {
    const double dx = std::max(xmax - xmin, 1e-9) * fraction;
    const double dy = std::max(ymax - ymin, 1e-9) * fraction;
    xmin -= dx;
    xmax += dx;
    ymin -= dy;
    ymax += dy;
  }

  void equalize() {
    const double cx = 0.5 * (xmin + xmax);
    const double cy = 0.5 * (ymin + ymax);
    const double half = 0.5 * std::max(xmax - xmin, ymax - ymin);
    xmin = cx - half;
    xmax = cx + half;
    ymin = cy - half;
    ymax = cy + half;
  }
};

class Panel {
 public:
  Panel(double left, Box box) : left_(left), box_(box) {}

  [[nodiscard]] double sx(double x) const {
    return left_ + (x - box_.xmin) / (box_.xmax - box_.xmin) * kPanelSize;
  }
  [[nodiscard]] double sy(double y) const {
    return kMargin + (box_.ymax - y) / (box_.ymax - box_.ymin) * kPanelSize;
  }

  void frame(std::ostringstream& out, const std::string& title) const {
    out << "<rect x=\"" << fmt(left_) << "\" y=\"" << fmt(kMargin) << "\" width=\""
        << fmt(kPanelSize) << "\" height=\"" << fmt(kPanelSize)
        << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    if (box_.ymin < 0.0 && box_.ymax > 0.0) {
      out << "<line x1=\"" << fmt(left_) << "\" y1=\"" << fmt(sy(0.0)) << "\" x2=\""
          << fmt(left_ + kPanelSize) << "\" y2=\"" << fmt(sy(0.0))
          << "\" stroke=\"#cccccc\" stroke-width=\"0.75\"/>\n";
    }
    if (box_.xmin < 0.0 && box_.xmax > 0.0) {
      out << "<line x1=\"" << fmt(sx(0.0)) << "\" y1=\"" << fmt(kMargin) << "\" x2=\""
          << fmt(sx(0.0)) << "\" y2=\"" << fmt(kMargin + kPanelSize)
          << "\" stroke=\"#cccccc\" stroke-width=\"0.75\"/>\n";
    }
    const double bottom = kMargin + kPanelSize;
    out << "<text x=\"" << fmt(left_ + 0.5 * kPanelSize) << "\" y=\"" << fmt(kMargin - 14.0)
        << "\" text-anchor=\"middle\">" << title << "</text>\n";
    out << "<text x=\"" << fmt(left_) << "\" y=\"" << fmt(bottom + 16.0)
        << "\" text-anchor=\"start\">" << fmt(box_.xmin) << "</text>\n";
    out << "<text x=\"" << fmt(left_ + kPanelSize) << "\" y=\"" << fmt(bottom + 16.0)
        << "\" text-anchor=\"end\">" << fmt(box_.xmax) << "</text>\n";
    out << "<text x=\"" << fmt(left_ - 4.0) << "\" y=\"" << fmt(bottom)
        << "\" text-anchor=\"end\">" << fmt(box_.ymin) << "</text>\n";
    out << "<text x=\"" << fmt(left_ - 4.0) << "\" y=\"" << fmt(kMargin + 10.0)
        << "\" text-anchor=\"end\">" << fmt(box_.ymax) << "</text>\n";
  }

  void dot(std::ostringstream& out, Vec2 p, const char* color) const {
    out << "<circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y)) << "\" r=\"2.500\" fill=\""
        << color << "\"/>\n";
  }

  void polyline(std::ostringstream& out, const std::vector<Vec2>& pts, const char* color,
                bool closed, double width = 1.5) const {
    if (pts.empty()) return;
    out << (closed ? "<polygon" : "<polyline") << " fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"" << fmt(width) << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out << ' ';
      out << fmt(sx(pts[i].x)) << ',' << fmt(sy(pts[i].y));
    }
    out << "\"/>\n";
  }

 private:
  double left_;
  Box box_;
};

void header(std::ostringstream& out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth) << "\" height=\""
      << fmt(kHeight) << "\" viewBox=\"0 0 " << fmt(kWidth) << ' ' << fmt(kHeight)
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::vector<Vec2> circle(Vec2 center, double r, int n) {
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * i / n;
    pts.push_back({center.x + r * std::cos(t), center.y + r * std::sin(t)});
  }
  return pts;
}

// Points where the circle crosses the zero set of the conic, by bisection between samples.
std::vector<Vec2> nodal_crossings(const NodalConic& conic, Vec2 center, double r, int n) {
  const auto at = [&](double t) {
    return Vec2{center.x + r * std::cos(t), center.y + r * std::sin(t)};
  };
  std::vector<Vec2> out;
  for (int i = 0; i < n; ++i) {
    double lo = 2.0 * std::numbers::pi * i / n;
    double hi = 2.0 * std::numbers::pi * (i + 1) / n;
    double flo = conic(at(lo));
    const double fhi = conic(at(hi));
    if (flo == 0.0) {
      out.push_back(at(lo));
      continue;
    }
    if ((flo < 0.0) == (fhi < 0.0) || fhi == 0.0) continue;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = conic(at(mid));
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    out.push_back(at(0.5 * (lo + hi)));
  }
  return out;
}

}  // namespace

std::vector<double> default_figure2_radii(int count) {
  if (count < 1) throw Error(ErrorCode::ParameterOutOfRange, "need at least one radius");
  const double outer = 0.95 * (std::sqrt(5.0) - 1.0) / 2.0;
  std::vector<double> radii;
  radii.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    radii.push_back(outer * std::pow(0.7, count - 1 - i));
  }
  return radii;
}

std::string figure1_svg(const RkcBundle& bundle) {
  const int n = static_cast<int>(bundle.boundary_samples.size());
  const std::vector<Vec2> disk_boundary = circle(bundle.disk.center, bundle.disk.radius, n);

  Box left;
  for (Vec2 p : disk_boundary) left.add(p);
  left.pad(0.08);
  left.equalize();
  Box right;
  for (Vec2 p : bundle.boundary_samples) right.add(p);
  right.pad(0.08);

  std::ostringstream out;
  header(out);
  const Panel lp(kMargin, left);
  const Panel rp(2.0 * kMargin + kPanelSize, right);
  lp.frame(out, "boundary of B");
  rp.frame(out, "image of the boundary (k = " + fmt(bundle.k) + ")");
  lp.polyline(out, disk_boundary, kPalette[0], true);
  rp.polyline(out, bundle.boundary_samples, kPalette[1], true);
  out << "</svg>\n";
  return out.str();
}

std::string figure2_svg(const RkcBundle& bundle, const std::vector<double>& radii) {
  const Vec2 origin{0.0, 0.0};
  const double room = bundle.disk.radius - distance(origin, bundle.disk.center);
  for (double r : radii) {
    if (!(r > 0.0 && r < room)) {
      throw Error(ErrorCode::ParameterOutOfRange, "circle radius " + fmt(r) + " leaves B");
    }
  }
  const PlanarMap map = as_planar_map(bundle.map);
  std::vector<std::vector<Vec2>> circles;
  std::vector<std::vector<Vec2>> images;
  for (double r : radii) {
    circles.push_back(circle(origin, r, kFigureCircleSamples));
    images.push_back(circle_image(map, origin, r, kFigureCircleSamples));
  }
  const QuadraticSolution& s = bundle.solution;
  const NodalConic conic = nodal_conic(s.a, s.b, s.c, bundle.k);
  const std::vector<Vec2> branch = conic.branch_through_origin(bundle.disk, 401);
  const std::vector<Vec2> disk_boundary =
      circle(bundle.disk.center, bundle.disk.radius, kFigureCircleSamples);

  Box left;
  for (Vec2 p : disk_boundary) left.add(p);
  left.pad(0.08);
  left.equalize();
  Box right;
  for (const auto& img : images) {
    for (Vec2 p : img) right.add(p);
  }
  if (images.empty()) right.add(origin);
  right.pad(0.08);

  std::ostringstream out;
  header(out);
  const Panel lp(kMargin, left);
  const Panel rp(2.0 * kMargin + kPanelSize, right);
  lp.frame(out, "circles and the nodal line");
  rp.frame(out, "images of the circles");
  lp.polyline(out, disk_boundary, "#888888", true, 0.75);
  for (std::size_t i = 0; i < circles.size(); ++i) {
    const char* color = kPalette[i % kPalette.size()];
    lp.polyline(out, circles[i], color, true);
    rp.polyline(out, images[i], color, true);
  }
  lp.polyline(out, branch, "#000000", false, 2.0);
  for (double r : radii) {
    for (Vec2 p : nodal_crossings(conic, origin, r, kFigureCircleSamples)) {
      lp.dot(out, p, "#000000");
      rp.dot(out, map(p), "#000000");
    }
  }
  out << "</svg>\n";
  return out.str();
}

void render_figure1(const RkcBundle& bundle, const std::filesystem::path& out) {
  write_text_file(out, figure1_svg(bundle));
}

void render_figure2(const RkcBundle& bundle, const std::vector<double>& radii,
                    const std::filesystem::path& out) {
  write_text_file(out, figure2_svg(bundle, radii));
}

}  // namespace interpen
