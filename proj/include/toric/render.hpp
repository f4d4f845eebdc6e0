#ifndef TORIC_RENDER_HPP
#define TORIC_RENDER_HPP

#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>

#include "toric/plumbing.hpp"

namespace toric {

struct RenderOptions {
    int canvas_size = 480; // pixels, >= 64
    double ray_length = 0.42; // fraction of canvas size
    bool show_labels = true;
};

namespace detail {

inline void check_options(const RenderOptions& o)
{
    if (o.canvas_size < 64 || o.ray_length <= 0)
        throw ToricError(ErrorCode::BadInput, "canvas must be >= 64 px");
}

inline double to_double(const Int& v)
{
    return v.convert_to<double>();
}

struct Point {
    double x, y;
};

/// Canvas point at distance r from the center along direction d (SVG y is down).
inline Point ray_tip(const Direction& d, double cx, double cy, double r)
{
    double x = to_double(d.x);
    double y = to_double(d.y);
    double len = std::hypot(x, y);
    return Point{cx + r * x / len, cy - r * y / len};
}

inline std::string num(double v)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << v;
    std::string s = os.str();
    if (s == "-0.0000")
        s = "0.0000";
    return s;
}

inline std::string ray_element(const Point& from, const Point& to)
{
    return "  <line class=\"ray\" x1=\"" + num(from.x) + "\" y1=\"" + num(from.y) +
           "\" x2=\"" + num(to.x) + "\" y2=\"" + num(to.y) +
           "\" stroke=\"black\" stroke-width=\"2\"/>\n";
}

inline std::string label_element(const Point& at, const std::string& text)
{
    return "  <text x=\"" + num(at.x) + "\" y=\"" + num(at.y) +
           "\" font-size=\"12\" font-family=\"monospace\">" + text + "</text>\n";
}

inline std::string svg_open(int size)
{
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << size << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " "
       << size << "\">\n";
    return os.str();
}

inline double arg_of(const Direction& d)
{
    double a = std::atan2(to_double(d.y), to_double(d.x));
    if (a < 0)
        a += 2 * M_PI;
    return a;
}

/// Counterclockwise arc (in math orientation) from a1 to a2 at radius r.
inline std::string arc_path(double cx, double cy, double r, double a1, double a2)
{
    double sweep = a2 - a1;
    if (sweep <= 0)
        sweep += 2 * M_PI;
    Point from{cx + r * std::cos(a1), cy - r * std::sin(a1)};
    Point to{cx + r * std::cos(a2), cy - r * std::sin(a2)};
    int large = sweep > M_PI ? 1 : 0;
    std::ostringstream os;
    // sweep-flag 0 is counterclockwise in math coordinates (y flipped)
    os << "M " << num(from.x) << " " << num(from.y) << " A " << num(r) << " "
       << num(r) << " 0 " << large << " 0 " << num(to.x) << " " << num(to.y);
    return os.str();
}

} // namespace detail

/**
 * Schematic SVG of a moment cone: two labelled rays, a shaded sector when
 * the total angle is below 2pi, and an annotated arc recording the winding
 * otherwise. Output is deterministic for identical inputs.
 */
inline std::string render_cone_svg(const MomentCone& c, const RenderOptions& o)
{
    check_cone(c);
    detail::check_options(o);
    double cx = o.canvas_size / 2.0;
    double cy = o.canvas_size / 2.0;
    double r = o.ray_length * o.canvas_size;

    detail::Point origin{cx, cy};
    detail::Point tip1 = detail::ray_tip(c.r1, cx, cy, r);
    detail::Point tip2 = detail::ray_tip(c.r2, cx, cy, r);
    double a1 = detail::arg_of(c.r1);
    double a2 = detail::arg_of(c.r2);

    std::string svg = detail::svg_open(o.canvas_size);
    if (c.winding == 0) {
        // shaded sector between the rays (total angle < 2pi)
        std::string path = "M " + detail::num(cx) + " " + detail::num(cy) + " L " +
                           detail::num(tip1.x) + " " + detail::num(tip1.y) + " " +
                           detail::arc_path(cx, cy, r, a1, a2) + " Z";
        svg += "  <path class=\"sector\" d=\"" + path +
               "\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
    }
    svg += detail::ray_element(origin, tip1);
    svg += detail::ray_element(origin, tip2);
    if (c.winding >= 1) {
        svg += "  <path class=\"winding-arc\" d=\"" +
               detail::arc_path(cx, cy, 0.55 * r, a1, a2) +
               "\" fill=\"none\" stroke=\"#de2d26\" stroke-width=\"1.5\"/>\n";
        std::string turns = "+" + c.winding.str() +
                            (c.winding == 1 ? " turn" : " turns");
        svg += detail::label_element(detail::Point{cx + 6, cy - 0.6 * r}, turns);
    }
    if (o.show_labels) {
        svg += detail::label_element(
            detail::Point{tip1.x + 4, tip1.y - 4},
            "r1=(" + c.r1.x.str() + "," + c.r1.y.str() + ")");
        svg += detail::label_element(
            detail::Point{tip2.x + 4, tip2.y - 4},
            "r2=(" + c.r2.x.str() + "," + c.r2.y.str() + ")");
    }
    svg += "</svg>\n";
    return svg;
}

/**
 * Schematic SVG of the decomposed plumbing moment image: the fan of
 * transformed L-shape rays, consecutive pieces sharing a boundary ray.
 * Vertex offsets of the true L-shapes are not drawn.
 */
inline std::string render_plumbing_svg(const Plumbing& p, const RenderOptions& o)
{
    detail::check_options(o);
    auto rays = fan_rays(p);
    double cx = o.canvas_size / 2.0;
    double cy = o.canvas_size / 2.0;
    double r = o.ray_length * o.canvas_size;

    std::string svg = detail::svg_open(o.canvas_size);
    detail::Point origin{cx, cy};
    for (std::size_t j = 0; j < rays.size(); ++j) {
        detail::Point tip = detail::ray_tip(rays[j], cx, cy, r);
        svg += detail::ray_element(origin, tip);
        if (o.show_labels)
            svg += detail::label_element(
                detail::Point{tip.x + 4, tip.y - 4},
                "(" + rays[j].x.str() + "," + rays[j].y.str() + ")");
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace toric

#endif // TORIC_RENDER_HPP
