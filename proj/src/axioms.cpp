#include "origami/axioms.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace origami {

namespace {

constexpr int kOracleSamples = 2048;
constexpr int kOracleBisections = 80;
constexpr double kDedupQuantum = 1e-7;

bool same_crease(const Line& a, const Line& b) {
    return std::abs(a.nx() - b.nx()) < kDedupQuantum && std::abs(a.ny() - b.ny()) < kDedupQuantum &&
           std::abs(a.offset() - b.offset()) < kDedupQuantum;
}

Line bisector_line(Point p, Point q) {
    const Point n = q - p;
    return Line::from_equation(n.x, n.y, dot(n, midpoint(p, q)));
}

}  // namespace

std::string_view to_string(FoldKind kind) {
    switch (kind) {
        case FoldKind::O1: return "O1";
        case FoldKind::O2: return "O2";
        case FoldKind::O3: return "O3";
        case FoldKind::O4: return "O4";
        case FoldKind::O5: return "O5";
        case FoldKind::O6: return "O6";
        case FoldKind::O7: return "O7";
        case FoldKind::Derived: return "derived";
    }
    return "?";
}

Crease::Crease(Line line, FoldKind kind, std::vector<MovedPair> moved, const Tolerance& tol)
    : line_(line), kind_(kind), moved_(std::move(moved)) {
    for (const auto& m : moved_) {
        const Point mirrored = reflect_point(m.source, line_);
        const double scale = std::max({1.0, norm(m.source), norm(m.image)});
        if (distance(mirrored, m.image) > 10.0 * tol.eps_abs * scale) {
            throw ResidualFailure(fmt::format(
                "crease does not carry ({}, {}) onto ({}, {}): mirror image is ({}, {})", m.source.x,
                m.source.y, m.image.x, m.image.y, mirrored.x, mirrored.y));
        }
    }
}

Crease o1_connect(Point p, Point q, const Tolerance& tol) {
    return Crease(line_through(p, q, tol), FoldKind::O1, {{p, p}, {q, q}}, tol);
}

Crease o2_fold_point_to_point(Point p, Point q, const Tolerance& tol) {
    if (distance(p, q) <= tol.eps_abs) {
        throw DegenerateInput("o2: cannot fold a point onto itself");
    }
    return Crease(bisector_line(p, q), FoldKind::O2, {{p, q}, {q, p}}, tol);
}

O3Result o3_fold_line_to_line(const Line& l1, const Line& l2, const Tolerance& tol) {
    const auto hit = intersect_lines(l1, l2, tol);
    if (std::holds_alternative<Coincident>(hit)) {
        return {O3Case::Coincident, {Crease(l1, FoldKind::O3)}};
    }
    const Point n1 = l1.normal();
    const Point n2 = l2.normal();
    if (std::holds_alternative<Parallel>(hit)) {
        const double s = dot(n1, n2) >= 0.0 ? 1.0 : -1.0;
        const Line mid = Line::from_equation(n1.x, n1.y, 0.5 * (l1.offset() + s * l2.offset()));
        const Point on1 = l1.foot(Point{});
        return {O3Case::Parallel, {Crease(mid, FoldKind::O3, {{on1, reflect_point(on1, mid)}}, tol)}};
    }
    const Point corner = std::get<Point>(hit);
    const Point probe = corner + l1.direction();
    std::vector<Crease> out;
    for (double s : {-1.0, 1.0}) {
        const Point n = n1 + s * n2;
        const Line b = Line::from_equation(n.x, n.y, l1.offset() + s * l2.offset());
        out.emplace_back(b, FoldKind::O3, std::vector<MovedPair>{{probe, reflect_point(probe, b)}}, tol);
    }
    std::sort(out.begin(), out.end(),
              [](const Crease& a, const Crease& b) { return angle_of(a.line()) < angle_of(b.line()); });
    return {O3Case::Intersecting, std::move(out)};
}

Crease o4_perpendicular(const Line& l, Point p) {
    return Crease(perpendicular_through(l, p), FoldKind::O4, {{p, p}});
}

double fold_offset(Point p, Point image, const Line& l) {
    return dot(l.foot(p) - image, l.direction());
}

std::vector<Crease> o5_point_to_line_through_point(Point p, const Line& l, Point q,
                                                   const Tolerance& tol) {
    const double radius = distance(p, q);
    const Point foot = l.foot(q);
    const double h = distance_point_line(q, l);
    const double gap = radius * radius - h * h;
    std::vector<Point> images;
    if (gap < -tol.eps_abs * std::max(1.0, radius * radius)) {
        return {};
    }
    if (std::abs(gap) <= tol.eps_abs * std::max(1.0, radius * radius)) {
        images.push_back(foot);
    } else {
        const double half = std::sqrt(gap);
        images.push_back(foot + half * l.direction());
        images.push_back(foot - half * l.direction());
    }
    std::vector<Crease> out;
    for (Point img : images) {
        if (distance(img, p) <= tol.eps_abs) {
            // p already on l: the fold through p and q keeps it there.
            if (distance(p, q) > tol.eps_abs) {
                out.emplace_back(line_through(p, q, tol), FoldKind::O5,
                                 std::vector<MovedPair>{{p, p}}, tol);
            }
            continue;
        }
        out.emplace_back(bisector_line(p, img), FoldKind::O5, std::vector<MovedPair>{{p, img}}, tol);
    }
    std::sort(out.begin(), out.end(), [&](const Crease& a, const Crease& b) {
        return fold_offset(p, a.moved_pairs()[0].image, l) > fold_offset(p, b.moved_pairs()[0].image, l);
    });
    return out;
}

std::vector<Crease> o7_point_to_line_perp(Point p, const Line& l1, const Line& l2,
                                          const Tolerance& tol) {
    const Point d2 = l2.direction();
    const double along = dot(l1.normal(), d2);
    if (std::abs(along) < tol.eps_abs) {
        return {};
    }
    const double t = -l1.signed_distance(p) / along;
    if (std::abs(t) <= tol.eps_abs) {
        return {Crease(perpendicular_through(l2, p), FoldKind::O7, {{p, p}}, tol)};
    }
    const Point image = p + t * d2;
    return {Crease(bisector_line(p, image), FoldKind::O7, {{p, image}}, tol)};
}

Square construct_square(const Line& c1, Point a, double side, const Tolerance& tol) {
    if (!(side > 0.0)) {
        throw DegenerateInput(fmt::format("square side must be positive (got {})", side));
    }
    if (distance_point_line(a, c1) > tol.eps_abs * std::max(1.0, norm(a))) {
        throw DegenerateInput("construct_square: corner A is not on crease c1");
    }
    const Point u = c1.direction();
    const Crease c2 = o4_perpendicular(c1, a);
    const Point d = a + side * u;
    const Crease c3 = o4_perpendicular(c1, d);
    // Folding c1 onto c2 gives the two diagonals through A; keep the one that
    // lands C on the positively oriented side.
    const Point expected_c = d + side * Point{u.y, -u.x};
    const auto bisectors = o3_fold_line_to_line(c1, c2.line(), tol);
    const Crease* c4 = nullptr;
    Point c{};
    for (const auto& cand : bisectors.creases) {
        const auto hit = intersect_lines(cand.line(), c3.line(), tol);
        if (const Point* p = std::get_if<Point>(&hit); p && distance(*p, expected_c) < 1e-6 * side) {
            c4 = &cand;
            c = *p;
        }
    }
    if (c4 == nullptr) {
        throw ResidualFailure("construct_square: diagonal fold did not meet c3");
    }
    const Crease c5 = o4_perpendicular(c3.line(), c);
    const auto hit_b = intersect_lines(c5.line(), c2.line(), tol);
    const Point b = std::get<Point>(hit_b);
    return Square{a, b, c, d, side,
                  {Crease(c1, FoldKind::Derived, {{a, a}, {d, d}}, tol), c2, c3, *c4, c5}};
}

std::vector<Crease> o6_simultaneous_oracle(Point a, Point b, const Line& l1, const Line& l2,
                                           const Tolerance& tol) {
    const Point base = l1.foot(a);
    const Point dir = l1.direction();
    const double scale = std::max({norm(a), norm(b), 1.0});

    // Signed distance of reflect(B) to l2 for the crease carrying A onto
    // base + t·dir. Undefined only when that image is A itself.
    auto residual = [&](double u, bool& ok) {
        const Point image = base + scale * std::tan(u) * dir;
        if (distance(image, a) <= tol.eps_abs) {
            ok = false;
            return 0.0;
        }
        ok = true;
        return l2.signed_distance(reflect_point(b, bisector_line(a, image)));
    };

    std::vector<double> us(kOracleSamples);
    std::vector<double> fs(kOracleSamples);
    std::vector<bool> valid(kOracleSamples);
    for (int i = 0; i < kOracleSamples; ++i) {
        us[i] = (i + 0.5) / kOracleSamples * kPi - kPi / 2;
        bool ok = false;
        fs[i] = residual(us[i], ok);
        valid[i] = ok;
    }

    std::vector<double> roots;
    for (int i = 0; i < kOracleSamples; ++i) {
        if (!valid[i]) continue;
        if (fs[i] == 0.0) {
            roots.push_back(us[i]);
            continue;
        }
        if (i + 1 >= kOracleSamples || !valid[i + 1] || fs[i + 1] == 0.0) continue;
        if ((fs[i] < 0.0) == (fs[i + 1] < 0.0)) continue;
        double lo = us[i];
        double hi = us[i + 1];
        double flo = fs[i];
        for (int k = 0; k < kOracleBisections; ++k) {
            const double mid = 0.5 * (lo + hi);
            bool ok = false;
            const double fm = residual(mid, ok);
            if (!ok) break;
            if ((fm < 0.0) == (flo < 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        roots.push_back(0.5 * (lo + hi));
    }

    std::vector<Crease> out;
    for (double u : roots) {
        const Point image_a = base + scale * std::tan(u) * dir;
        if (distance(image_a, a) <= tol.eps_abs) continue;
        const Line g = bisector_line(a, image_a);
        const bool dup = std::any_of(out.begin(), out.end(),
                                     [&](const Crease& c) { return same_crease(c.line(), g); });
        if (dup) continue;
        const Point image_b = reflect_point(b, g);
        // Reject brackets that straddle a jump rather than a true zero.
        if (distance_point_line(image_b, l2) > 1e-6 * scale) continue;
        out.emplace_back(g, FoldKind::O6, std::vector<MovedPair>{{a, image_a}, {b, image_b}}, tol);
    }
    std::sort(out.begin(), out.end(), [&](const Crease& x, const Crease& y) {
        return fold_offset(a, x.moved_pairs()[0].image, l1) > fold_offset(a, y.moved_pairs()[0].image, l1);
    });
    return out;
}

}  // namespace origami
