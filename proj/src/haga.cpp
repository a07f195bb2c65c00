#include "origami/haga.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "origami/errors.hpp"

namespace origami {

namespace {

struct Frame {
    double R;
    Point A, B, C, D;
    Line AB, BC, CD;
};

Frame frame(double R) {
    if (!(R > 0.0) || !std::isfinite(R)) {
        throw DomainError(fmt::format("square side R must be positive (got {})", R));
    }
    Frame f{R, {0.0, R}, {0.0, 0.0}, {R, 0.0}, {R, R}, Line::y_axis(), Line::x_axis(), Line::vertical(R)};
    return f;
}

void check_x(double x, double lo, bool lo_open, double hi, bool hi_open, const char* who) {
    const bool ok = std::isfinite(x) && (lo_open ? x > lo : x >= lo) && (hi_open ? x < hi : x <= hi);
    if (!ok) {
        throw DomainError(fmt::format("{}: x = {} outside {}{}, {}{}", who, x, lo_open ? "(" : "[", lo, hi,
                                      hi_open ? ")" : "]"));
    }
}

void put_hit(std::map<std::string, Point>& pts, const std::string& name, const Line& a, const Line& b) {
    if (const auto hit = intersect_lines(a, b); std::holds_alternative<Point>(hit)) {
        pts.emplace(name, std::get<Point>(hit));
    }
}

// The fold of `corner` onto `image`; `other` is the remaining corner of the
// folded side and `far_side` the side its image line is cut with.
HagaConstruction corner_fold(double x, const Frame& f, Point corner, Point image, Point other,
                             const Line& far_side) {
    HagaConstruction h;
    h.x = x;
    h.R = f.R;
    const Crease g = o2_fold_point_to_point(corner, image);
    h.creases.emplace("g", g);
    auto& pts = h.points;
    pts.emplace("C_prime", image);
    const Point p = midpoint(corner, image);
    pts.emplace("P", p);
    pts.emplace("P_prime", f.BC.foot(p));
    put_hit(pts, "V", g.line(), f.BC);
    put_hit(pts, "E", g.line(), f.AB);
    put_hit(pts, "F", g.line(), f.CD);
    const Point w = reflect_point(other, g.line());
    pts.emplace("W", w);
    if (distance(w, image) > 1e-12 * f.R) {
        const Line side_image = line_through(w, image);
        if (const auto hit = intersect_lines(side_image, far_side); std::holds_alternative<Point>(hit)) {
            pts.emplace("L", std::get<Point>(hit));
        }
    }
    h.lengths.emplace("corner_image", distance(corner, image));
    if (pts.count("E")) h.lengths.emplace("EB", distance(pts.at("E"), f.B));
    if (pts.count("F")) h.lengths.emplace("FC", distance(pts.at("F"), f.C));
    if (pts.count("V")) h.lengths.emplace("VB", distance(pts.at("V"), f.B));
    return h;
}

template <class Map>
const auto& lookup(const Map& m, const std::string& name, const char* kind) {
    const auto it = m.find(name);
    if (it == m.end()) throw UnknownName(fmt::format("no {} named '{}'", kind, name));
    return it->second;
}

}  // namespace

const Point& HagaConstruction::point(const std::string& name) const { return lookup(points, name, "point"); }
const Crease& HagaConstruction::crease(const std::string& name) const {
    return lookup(creases, name, "crease");
}
double HagaConstruction::length(const std::string& name) const { return lookup(lengths, name, "length"); }

HagaConstruction fold_corner_C(double x, double R) {
    check_x(x, 0.0, false, 1.0, true, "fold_corner_C");
    const Frame f = frame(R);
    return corner_fold(x, f, f.C, {x * R, R}, f.B, f.AB);
}

HagaConstruction fold_corner_B(double x, double R) {
    check_x(x, 0.0, true, 1.0, false, "fold_corner_B");
    const Frame f = frame(R);
    HagaConstruction h = corner_fold(x, f, f.B, {x * R, R}, f.C, f.CD);
    // Here the moved corner is B.
    auto node = h.points.extract("C_prime");
    node.key() = "B_prime";
    h.points.insert(std::move(node));
    return h;
}

HagaSecondTheorem haga_second_theorem(double x, double R) {
    check_x(x, 0.0, false, 1.0, false, "haga_second_theorem");
    const Frame f = frame(R);
    const Point cp{x * R, R};
    const Crease g = o2_fold_point_to_point(f.C, cp);
    const Crease fc = o2_fold_point_to_point(f.B, cp);
    // Normals (x − 1, 1) and (x, 1) are never parallel.
    const Point s = std::get<Point>(intersect_lines(g.line(), fc.line()));

    HagaSecondTheorem out;
    out.S = s;
    out.PC = midpoint(f.C, cp);
    out.PB = midpoint(f.B, cp);
    out.common_length = distance(s, f.B);

    HagaConstruction& h = out.construction;
    h.x = x;
    h.R = R;
    h.creases.emplace("g", g);
    h.creases.emplace("f", fc);
    h.points.emplace("C_prime", cp);
    h.points.emplace("S", s);
    h.points.emplace("PC", out.PC);
    h.points.emplace("PB", out.PB);
    put_hit(h.points, "E", g.line(), f.AB);
    put_hit(h.points, "F", g.line(), f.CD);
    put_hit(h.points, "G", fc.line(), f.AB);
    put_hit(h.points, "H", fc.line(), f.CD);
    h.lengths.emplace("SB", distance(s, f.B));
    h.lengths.emplace("SC", distance(s, f.C));
    h.lengths.emplace("SC_prime", distance(s, cp));
    h.lengths.emplace("PC_PB", distance(out.PC, out.PB));
    return out;
}

EgyptianTriangles egyptian_triangles(double R) {
    const Frame f = frame(R);
    const HagaConstruction h = fold_corner_C(0.5, R);
    const Line g = h.crease("g").line();
    const Point cp = h.point("C_prime");
    const Point F = h.point("F");
    const Point W = h.point("W");
    const Point E = h.point("E");
    const Point L = h.point("L");
    const Point G = reflect_point(L, g);

    EgyptianTriangles t;
    t.T1 = {distance(F, f.D), distance(f.D, cp), distance(cp, F)};
    t.T2 = {distance(cp, f.A), distance(f.A, L), distance(L, cp)};
    t.T3 = {distance(W, E), distance(L, W), distance(L, E)};
    // The angle at C′ in T2 is 2α.
    const double hyp = distance(L, cp);
    t.sin_2alpha = distance(f.A, L) / hyp;
    t.cos_2alpha = distance(cp, f.A) / hyp;
    t.points = {{"A", f.A}, {"B", f.B}, {"C", f.C}, {"D", f.D}, {"C_prime", cp},
                {"P", h.point("P")}, {"Q", midpoint(L, G)}, {"S", midpoint(W, f.B)},
                {"V", h.point("V")}, {"W", W}, {"E", E}, {"L", L}, {"G", G}, {"F", F}};
    return t;
}

}  // namespace origami
