#include "torus/svg.hpp"

#include <array>
#include <sstream>

namespace torus::svg {

Viewport::Viewport(const Vec2& lo, const Vec2& hi, int width_px) {
  if (width_px <= 0) throw std::invalid_argument("SVG width must be positive");
  const Rat span = max(max(hi.x - lo.x, hi.y - lo.y), Rat(1));
  const Rat pad = span / Rat(10);
  left_ = lo.x - pad;
  top_ = hi.y + pad;
  const Rat plane_width = hi.x - lo.x + 2 * pad;
  const Rat plane_height = hi.y - lo.y + 2 * pad;
  scale_ = Rat(width_px) / plane_width;
  width_ = Rat(width_px);
  height_ = plane_height * scale_;
}

Vec2 Viewport::lower() const { return {left_, top_ - height_ / scale_}; }
Vec2 Viewport::upper() const { return {left_ + width_ / scale_, top_}; }

std::string fixed3(const Rat& value) {
  const mpz_class scaled = (value * Rat(1000) + Rat(1, 2)).floor();
  const bool negative = scaled < 0;
  const mpz_class mag = negative ? mpz_class(-scaled) : scaled;
  const mpz_class whole = mag / 1000;
  const mpz_class frac = mag % 1000;
  std::string frac_text = frac.get_str();
  frac_text.insert(0, 3 - frac_text.size(), '0');
  return (negative ? "-" : "") + whole.get_str() + "." + frac_text;
}

namespace {

constexpr std::array<const char*, 6> kPalette = {"#9ecae1", "#fdae6b", "#a1d99b",
                                                 "#bcbddc", "#fc9272", "#d9d9d9"};

}  // namespace

std::string render(const Tiling& tiling, int width_px) {
  const Vec2& u = tiling.basis.u();
  const Vec2& v = tiling.basis.v();
  const Vec2 w = u + v;

  Vec2 lo{min(min(Rat(0), u.x), min(v.x, w.x)), min(min(Rat(0), u.y), min(v.y, w.y))};
  Vec2 hi{max(max(Rat(0), u.x), max(v.x, w.x)), max(max(Rat(0), u.y), max(v.y, w.y))};
  for (const Rect& r : tiling.rects) {
    lo = {min(lo.x, r.x0), min(lo.y, r.y0)};
    hi = {max(hi.x, r.x1), max(hi.y, r.y1)};
  }
  const Viewport view(lo, hi, width_px);
  auto X = [&](const Rat& x) { return fixed3(view.px(x)); };
  auto Y = [&](const Rat& y) { return fixed3(view.py(y)); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed3(view.width())
      << "\" height=\"" << fixed3(view.height()) << "\" viewBox=\"0 0 " << fixed3(view.width())
      << ' ' << fixed3(view.height()) << "\">\n"
      << "  <defs>\n"
      << "    <marker id=\"arrowhead\" markerWidth=\"10\" markerHeight=\"7\" refX=\"9\" refY=\"3.5\" "
         "orient=\"auto\">\n"
      << "      <polygon points=\"0 0, 10 3.5, 0 7\" fill=\"black\"/>\n"
      << "    </marker>\n"
      << "  </defs>\n";

  // Coordinate axes through the origin.
  const Vec2 vlo = view.lower();
  const Vec2 vhi = view.upper();
  out << "  <line class=\"axis\" x1=\"" << X(vlo.x) << "\" y1=\"" << Y(Rat(0)) << "\" x2=\""
      << X(vhi.x) << "\" y2=\"" << Y(Rat(0)) << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  out << "  <line class=\"axis\" x1=\"" << X(Rat(0)) << "\" y1=\"" << Y(vlo.y) << "\" x2=\""
      << X(Rat(0)) << "\" y2=\"" << Y(vhi.y) << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

  for (std::size_t i = 0; i < tiling.rects.size(); ++i) {
    const Rect& r = tiling.rects[i];
    out << "  <rect class=\"tile\" x=\"" << X(r.x0) << "\" y=\"" << Y(r.y1) << "\" width=\""
        << fixed3(view.length(r.width())) << "\" height=\"" << fixed3(view.length(r.height()))
        << "\" fill=\"" << kPalette[i % kPalette.size()]
        << "\" fill-opacity=\"0.6\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }

  out << "  <polygon class=\"fundamental-domain\" points=\"" << X(Rat(0)) << ',' << Y(Rat(0))
      << ' ' << X(u.x) << ',' << Y(u.y) << ' ' << X(w.x) << ',' << Y(w.y) << ' ' << X(v.x) << ','
      << Y(v.y) << "\" fill=\"none\" stroke=\"#444444\" stroke-dasharray=\"6 4\"/>\n";

  // Lattice points strictly inside the visible area.
  for (const Vec2& p : lattice_points_in_open_box(tiling.basis, vlo, vhi)) {
    out << "  <circle class=\"lattice-point\" cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y)
        << "\" r=\"3\" fill=\"black\"/>\n";
  }

  const std::array<std::pair<const char*, const Vec2*>, 2> arrows = {{{"u", &u}, {"v", &v}}};
  for (const auto& [name, vec] : arrows) {
    out << "  <path class=\"basis-arrow\" d=\"M " << X(Rat(0)) << ' ' << Y(Rat(0)) << " L "
        << X(vec->x) << ' ' << Y(vec->y)
        << "\" stroke=\"black\" stroke-width=\"3\" marker-end=\"url(#arrowhead)\"/>\n";
    out << "  <text x=\"" << X(vec->x) << "\" y=\"" << Y(vec->y)
        << "\" font-family=\"sans-serif\" font-size=\"14\" dx=\"4\" dy=\"-4\">" << name
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace torus::svg
