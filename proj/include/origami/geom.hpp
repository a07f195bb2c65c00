#pragma once

#include <cmath>
#include <variant>

#include "origami/errors.hpp"

namespace origami {

/// Absolute and relative tolerances. Every geometric predicate takes one
/// explicitly; the defaults suit unit-square-scale data.
struct Tolerance {
    double eps_abs = 1e-9;
    double eps_rel = 1e-9;

    Tolerance() = default;
    Tolerance(double abs, double rel);
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point() = default;
    Point(double x_, double y_);

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
    friend Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
    friend bool operator==(const Point&, const Point&) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point midpoint(Point a, Point b) { return 0.5 * (a + b); }
/// Counter-clockwise quarter turn.
inline Point rot90(Point a) { return {-a.y, a.x}; }

bool near(Point a, Point b, const Tolerance& tol = {});

/// A line n·p = c with unit normal n in canonical orientation
/// (n_x > 0, or n_x = 0 and n_y > 0).
class Line {
public:
    /// Normalizes (a, b) and orients canonically. Throws DegenerateInput when
    /// (a, b) is (numerically) zero.
    static Line from_equation(double a, double b, double c);
    static Line x_axis() { return from_equation(0, 1, 0); }
    static Line y_axis() { return from_equation(1, 0, 0); }
    static Line horizontal(double y) { return from_equation(0, 1, y); }
    static Line vertical(double x) { return from_equation(1, 0, x); }
    /// Line through p whose direction makes angle theta with the +x axis.
    static Line at_angle(double theta, Point p);

    Point normal() const { return {nx_, ny_}; }
    double nx() const { return nx_; }
    double ny() const { return ny_; }
    double offset() const { return c_; }

    /// Unit direction with positive x component (or +y for vertical lines).
    Point direction() const;
    /// Signed distance n·p − c.
    double signed_distance(Point p) const { return nx_ * p.x + ny_ * p.y - c_; }
    /// Orthogonal projection of p onto the line.
    Point foot(Point p) const;
    /// Line shifted by d along its canonical normal.
    Line shifted(double d) const { return from_equation(nx_, ny_, c_ + d); }

    friend bool operator==(const Line&, const Line&) = default;

private:
    Line(double nx, double ny, double c) : nx_(nx), ny_(ny), c_(c) {}
    double nx_ = 0.0;
    double ny_ = 1.0;
    double c_ = 0.0;
};

bool near(const Line& a, const Line& b, const Tolerance& tol = {});

struct Parallel {
    friend bool operator==(Parallel, Parallel) = default;
};
struct Coincident {
    friend bool operator==(Coincident, Coincident) = default;
};
using Intersection = std::variant<Point, Parallel, Coincident>;

Point reflect_point(Point p, const Line& l);
/// Parallel when |cross(n1, n2)| < eps_abs.
Intersection intersect_lines(const Line& l1, const Line& l2, const Tolerance& tol = {});
/// Throws DegenerateInput when |p − q| <= eps_abs.
Line line_through(Point p, Point q, const Tolerance& tol = {});
Line perpendicular_through(const Line& l, Point p);
double distance_point_line(Point p, const Line& l);
/// Direction angle in [0, π).
double angle_of(const Line& l);

constexpr double kPi = 3.14159265358979323846;
inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace origami
