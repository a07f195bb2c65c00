#include "origami/geom.hpp"

#include <fmt/format.h>

namespace origami {

namespace {
// Normal x components this small count as zero when choosing the orientation,
// so a horizontal line does not flip sign on rounding noise.
constexpr double kOrientationSlack = 1e-14;
}  // namespace

Tolerance::Tolerance(double abs, double rel) : eps_abs(abs), eps_rel(rel) {
    if (!(abs > 0.0) || !(rel > 0.0)) {
        throw DomainError(fmt::format("tolerances must be positive (got {}, {})", abs, rel));
    }
}

Point::Point(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x_) || !std::isfinite(y_)) {
        throw DomainError(fmt::format("point coordinates must be finite (got {}, {})", x_, y_));
    }
}

bool near(Point a, Point b, const Tolerance& tol) {
    return distance(a, b) <= tol.eps_abs;
}

Line Line::from_equation(double a, double b, double c) {
    const double len = std::hypot(a, b);
    if (!(len > 1e-300) || !std::isfinite(len) || !std::isfinite(c)) {
        throw DegenerateInput(fmt::format("line normal ({}, {}) is degenerate", a, b));
    }
    // Already unit: keep the bits so normalizing twice changes nothing.
    const double k = std::abs(len - 1.0) < 4e-16 ? 1.0 : len;
    double nx = a / k;
    double ny = b / k;
    double off = c / k;
    const bool flip = nx < -kOrientationSlack || (std::abs(nx) <= kOrientationSlack && ny < 0.0);
    if (flip) {
        nx = -nx;
        ny = -ny;
        off = -off;
    }
    return Line(nx, ny, off);
}

Line Line::at_angle(double theta, Point p) {
    const Point n{-std::sin(theta), std::cos(theta)};
    return from_equation(n.x, n.y, dot(n, p));
}

Point Line::direction() const {
    Point d{ny_, -nx_};
    if (d.x < -kOrientationSlack || (std::abs(d.x) <= kOrientationSlack && d.y < 0.0)) {
        d = -1.0 * d;
    }
    return d;
}

Point Line::foot(Point p) const {
    return p - signed_distance(p) * normal();
}

bool near(const Line& a, const Line& b, const Tolerance& tol) {
    return std::abs(a.nx() - b.nx()) <= tol.eps_abs && std::abs(a.ny() - b.ny()) <= tol.eps_abs &&
           std::abs(a.offset() - b.offset()) <= tol.eps_abs;
}

Point reflect_point(Point p, const Line& l) {
    return p - 2.0 * l.signed_distance(p) * l.normal();
}

Intersection intersect_lines(const Line& l1, const Line& l2, const Tolerance& tol) {
    const Point n1 = l1.normal();
    const Point n2 = l2.normal();
    const double det = cross(n1, n2);
    if (std::abs(det) < tol.eps_abs) {
        const double s = dot(n1, n2) >= 0.0 ? 1.0 : -1.0;
        if (std::abs(l1.offset() - s * l2.offset()) <= tol.eps_abs) {
            return Coincident{};
        }
        return Parallel{};
    }
    // Cramer's rule on [n1; n2] p = [c1; c2].
    const double x = (l1.offset() * n2.y - n1.y * l2.offset()) / det;
    const double y = (n1.x * l2.offset() - l1.offset() * n2.x) / det;
    return Point{x, y};
}

Line line_through(Point p, Point q, const Tolerance& tol) {
    if (distance(p, q) <= tol.eps_abs) {
        throw DegenerateInput(
            fmt::format("line_through: points ({}, {}) and ({}, {}) coincide", p.x, p.y, q.x, q.y));
    }
    const Point n = rot90(q - p);
    return Line::from_equation(n.x, n.y, dot(n, p));
}

Line perpendicular_through(const Line& l, Point p) {
    const Point n = l.direction();
    return Line::from_equation(n.x, n.y, dot(n, p));
}

double distance_point_line(Point p, const Line& l) {
    return std::abs(l.signed_distance(p));
}

double angle_of(const Line& l) {
    const Point d = l.direction();
    double a = std::atan2(d.y, d.x);
    if (a < 0.0) a += kPi;
    if (a >= kPi) a -= kPi;
    return a;
}

}  // namespace origami
