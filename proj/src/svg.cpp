#include "trigbash/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "trigbash/sampling.hpp"

namespace trigbash {

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Frame {
  double xmin, xmax, ymin, ymax;  // padded world box
  double sc, width, height;

  double X(double x) const { return (x - xmin) * sc + 20.0; }
  double Y(double y) const { return (ymax - y) * sc + 20.0; }  // svg y grows down
};

}  // namespace

std::string render_svg(const dsl::Scene& scene, uint64_t seed) {
  dsl::EvalOutcome out{std::nullopt, {}};
  for (uint64_t i = 0; i < 1000 && !out.ok(); ++i)
    out = dsl::evaluate(scene, mix_seed(seed, i));
  if (!out.ok())
    throw GeomError(ErrKind::BadArgument,
                    "scene stayed degenerate for 1000 attempts at this seed");
  const dsl::Bindings& b = *out.bindings;

  std::vector<std::pair<std::string, Point>> points;
  std::vector<std::pair<std::string, Line>> lines;
  std::vector<std::pair<std::string, Circle>> circles;
  for (const auto& [name, v] : b.named) {
    if (const Point* p = std::get_if<Point>(&v)) points.emplace_back(name, *p);
    else if (const Line* l = std::get_if<Line>(&v)) lines.emplace_back(name, *l);
    else if (const Circle* c = std::get_if<Circle>(&v)) circles.emplace_back(name, *c);
  }

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto grow = [&](double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const auto& [n, p] : points) grow(p.x(), p.y());
  for (const auto& [n, c] : circles) {
    grow(c.center.x() - c.radius, c.center.y() - c.radius);
    grow(c.center.x() + c.radius, c.center.y() + c.radius);
  }
  if (points.empty() && circles.empty()) grow(0, 0), grow(1, 1);
  double pad = 0.1 * std::max({xmax - xmin, ymax - ymin, 1e-6});
  Frame f{xmin - pad, xmax + pad, ymin - pad, ymax + pad, 0, 0, 0};
  f.sc = 760.0 / std::max(f.xmax - f.xmin, f.ymax - f.ymin);
  f.width = (f.xmax - f.xmin) * f.sc + 40.0;
  f.height = (f.ymax - f.ymin) * f.sc + 40.0;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(f.width) << " "
     << fmt(f.height) << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(f.width) << "\" height=\"" << fmt(f.height)
     << "\" fill=\"white\"/>\n";

  for (const auto& [name, c] : circles) {
    os << "  <circle cx=\"" << fmt(f.X(c.center.x())) << "\" cy=\"" << fmt(f.Y(c.center.y()))
       << "\" r=\"" << fmt(c.radius * f.sc)
       << "\" fill=\"none\" stroke=\"#4477aa\" stroke-width=\"1\"/>\n";
  }

  // Liang-Barsky clip of each infinite line against the padded world box
  for (const auto& [name, l] : lines) {
    Point base = l.offset() * l.normal();
    Vec2 d = l.direction();
    double t0 = -1e18, t1 = 1e18;
    bool ok = true;
    auto clip = [&](double p, double q) {
      if (std::abs(p) < 1e-15) {
        if (q < 0) ok = false;
        return;
      }
      double r = q / p;
      if (p < 0) t0 = std::max(t0, r);
      else t1 = std::min(t1, r);
    };
    clip(-d.x(), base.x() - f.xmin);
    clip(d.x(), f.xmax - base.x());
    clip(-d.y(), base.y() - f.ymin);
    clip(d.y(), f.ymax - base.y());
    if (!ok || t0 > t1) continue;
    Point p1 = base + t0 * d, p2 = base + t1 * d;
    os << "  <line x1=\"" << fmt(f.X(p1.x())) << "\" y1=\"" << fmt(f.Y(p1.y())) << "\" x2=\""
       << fmt(f.X(p2.x())) << "\" y2=\"" << fmt(f.Y(p2.y()))
       << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  }

  for (const auto& [name, p] : points) {
    os << "  <circle cx=\"" << fmt(f.X(p.x())) << "\" cy=\"" << fmt(f.Y(p.y()))
       << "\" r=\"3\" fill=\"#cc3311\"/>\n";
    os << "  <text x=\"" << fmt(f.X(p.x()) + 5.0) << "\" y=\"" << fmt(f.Y(p.y()) - 5.0)
       << "\" font-family=\"sans-serif\" font-size=\"14\">" << name << "</text>\n";
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace trigbash
