#include "origami/classics.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "origami/errors.hpp"

namespace origami {

HeptagonResult heptagon() {
    HeptagonResult r;
    r.polynomial = Cubic(1.0, -1.0, -2.0, 1.0);
    r.classification = classify(r.polynomial);
    const LillChain ch = lill_chain({1.0, -1.0, -2.0, 1.0});
    r.a_anchor = ch.a_anchor;
    r.b_anchor = ch.b_anchor;
    for (auto& f : solve_cubic_by_folding({1.0, -1.0, -2.0, 1.0})) {
        r.roots.push_back({f.x, f.fold.X, f.fold.crease, f.fold});
    }
    std::sort(r.roots.begin(), r.roots.end(), [](const auto& a, const auto& b) { return a.x > b.x; });
    return r;
}

SquareThirds square_thirds() {
    const Point A{0.0, 1.0}, B{0.0, 0.0}, C{1.0, 0.0}, D{1.0, 1.0};
    SquareThirds t;
    // E halves CD: fold B onto A.
    const Crease half = o2_fold_point_to_point(B, A);
    const Point E = std::get<Point>(intersect_lines(half.line(), line_through(C, D)));
    const Crease ac = o1_connect(A, C);
    const Crease be = o1_connect(B, E);
    t.point = std::get<Point>(intersect_lines(ac.line(), be.line()));
    const Crease hj = o4_perpendicular(line_through(A, B), t.point);
    const Point H = std::get<Point>(intersect_lines(hj.line(), line_through(A, B)));
    const Point J = std::get<Point>(intersect_lines(hj.line(), line_through(C, D)));
    const Crease fg = o3_fold_line_to_line(line_through(A, D), hj.line()).creases.front();
    const Point F = std::get<Point>(intersect_lines(fg.line(), line_through(A, B)));
    const Point G = std::get<Point>(intersect_lines(fg.line(), line_through(C, D)));
    t.creases = {{"AC", ac}, {"BE", be}, {"HJ", hj}, {"FG", fg}};
    t.points = {{"E", E}, {"H", H}, {"J", J}, {"F", F}, {"G", G}};
    return t;
}

DoublingResult double_cube(double L) {
    if (!(L > 0.0) || !std::isfinite(L)) {
        throw DomainError(fmt::format("cube side L must be positive (got {})", L));
    }
    const Cubic poly(1.0, -1.0, 1.0, -1.0 / 3.0);
    const auto roots = solve_cubic_real(poly);
    if (roots.size() != 1) {
        throw ResidualFailure("double_cube: expected a single real root");
    }
    DoublingResult d;
    d.L = L;
    d.s = roots.front();
    d.classification = classify(poly);
    d.ratio = (1.0 - d.s) / d.s;
    d.inv_s = 1.0 / d.s;

    const double s = d.s;
    const SquareThirds thirds = square_thirds();
    const double k = 0.5 * (1.0 - s * s);
    // Crease Y–Z: y = (x − k)/s, on the unit square.
    const Line unit_crease = Line::from_equation(1.0, -s, k);
    const Point C{1.0, 0.0};
    const Point J = thirds.points.at("J");
    const Point Cp = reflect_point(C, unit_crease);
    const Point Jp = reflect_point(J, unit_crease);
    // Parallel to CC′ through A meets line BC at C″.
    const Point A{0.0, 1.0};
    const Point n = rot90(Cp - C);
    const Line par = Line::from_equation(n.x, n.y, dot(n, A));
    const Point Cpp = std::get<Point>(intersect_lines(par, Line::x_axis()));

    auto put = [&](std::map<std::string, Point>& m, const char* name, Point p, double scale) {
        m.emplace(name, scale * p);
    };
    put(d.points, "X_third", thirds.point, L);
    for (const char* n : {"H", "J", "F", "G"}) put(d.points, n, thirds.points.at(n), L);
    put(d.points, "C_prime", Cp, L);
    put(d.points, "J_prime", Jp, L);
    put(d.points, "C_dblprime", Cpp, L);
    put(d.points, "Y", {k, 0.0}, L);
    put(d.points, "Z", {k + s, 1.0}, L);
    d.crease = Line::from_equation(1.0, -s, k * L);
    d.M = distance(L * C, L * Cpp);

    const double R = L / s;
    d.rescaled_side = R;
    put(d.rescaled_points, "A", A, R);
    put(d.rescaled_points, "C", C, R);
    put(d.rescaled_points, "C_prime", Cp, R);
    put(d.rescaled_points, "J", J, R);
    put(d.rescaled_points, "J_prime", Jp, R);
    d.rescaled_M = distance(d.rescaled_points.at("C_prime"), d.rescaled_points.at("A"));
    return d;
}

std::string_view to_string(TrisectionBranch b) {
    switch (b) {
        case TrisectionBranch::Alpha: return "alpha";
        case TrisectionBranch::PiMinusAlpha: return "pi_minus_alpha";
        case TrisectionBranch::PiPlusAlpha: return "pi_plus_alpha";
    }
    return "?";
}

const TrisectionSolution& TrisectionResult::branch(TrisectionBranch b) const {
    for (const auto& s : solutions) {
        if (s.which == b) return s;
    }
    throw UnknownName(fmt::format("no trisection solution tagged {}", to_string(b)));
}

namespace {

void check_trisection_domain(double alpha, double h) {
    if (!(alpha > 0.0 && alpha < kPi / 2)) {
        throw DomainError(fmt::format("trisection angle must lie in (0, pi/2) (got {})", alpha));
    }
    if (!(h > 0.0 && h < 0.5)) {
        throw DomainError(fmt::format("trisection height h must lie in (0, 1/2) (got {})", h));
    }
}

}  // namespace

Cubic trisection_cubic(double alpha, double h) {
    check_trisection_domain(alpha, h);
    const double t = std::tan(alpha);
    return Cubic(1.0, -3.0 * h / t, -3.0 * h * h, h * h * h / t);
}

double trisection_discriminant(double alpha, double h) {
    check_trisection_domain(alpha, h);
    const double t = std::tan(alpha);
    const double h3 = h * h * h;
    const double w = 1.0 + t * t;
    return -h3 * h3 * w * w / (t * t * t * t);
}

TrisectionResult trisect(double alpha, double h) {
    const Cubic cubic = trisection_cubic(alpha, h);
    TrisectionResult r;
    r.alpha = alpha;
    r.h = h;
    r.g1 = Line::at_angle(alpha, Point{});
    r.g3 = Line::horizontal(h);
    const Point B{0.0, 0.0};
    const Point E{0.0, 2.0 * h};
    const Point G{0.0, h};
    const double targets[3] = {(alpha - kPi) / 3.0, alpha / 3.0, (alpha + kPi) / 3.0};
    const TrisectionBranch tags[3] = {TrisectionBranch::PiMinusAlpha, TrisectionBranch::Alpha,
                                      TrisectionBranch::PiPlusAlpha};
    for (double X : solve_cubic_real(cubic)) {
        const double theta = std::atan(h / X);
        int best = 0;
        for (int k = 1; k < 3; ++k) {
            if (std::abs(theta - targets[k]) < std::abs(theta - targets[best])) best = k;
        }
        const Point Bp{X, h};
        const Line gl = o2_fold_point_to_point(B, Bp).line();
        const Point Ep = reflect_point(E, gl);
        const Crease g(gl, FoldKind::O6, {{B, Bp}, {E, Ep}});
        const Point Y = std::get<Point>(intersect_lines(g.line(), r.g3));
        r.solutions.push_back({tags[best], X, theta, g, line_through(B, Bp), line_through(B, Y), Bp, Ep,
                               reflect_point(G, g.line()), Y});
    }
    if (r.solutions.size() != 3) {
        throw ResidualFailure(fmt::format("trisection cubic gave {} real roots, expected 3", r.solutions.size()));
    }
    std::sort(r.solutions.begin(), r.solutions.end(),
              [](const auto& a, const auto& b) { return a.theta < b.theta; });
    return r;
}

AnyTrisection trisect_any(double angle, double h) {
    if (!(angle > 0.0 && angle < 1.5 * kPi) || std::abs(angle - kPi / 2) < 1e-12 ||
        std::abs(angle - kPi) < 1e-12) {
        throw DomainError(fmt::format("angle must lie in (0, 3pi/2) and differ from pi/2 and pi (got {})", angle));
    }
    double alpha = angle;
    TrisectionBranch tag = TrisectionBranch::Alpha;
    if (angle > kPi) {
        alpha = angle - kPi;
        tag = TrisectionBranch::PiPlusAlpha;
    } else if (angle > kPi / 2) {
        alpha = kPi - angle;
        tag = TrisectionBranch::PiMinusAlpha;
    }
    TrisectionResult base = trisect(alpha, h);
    TrisectionSolution sol = base.branch(tag);
    return {angle, angle / 3.0, std::move(base), std::move(sol)};
}

}  // namespace origami
