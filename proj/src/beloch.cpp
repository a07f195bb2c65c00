#include "origami/beloch.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "origami/errors.hpp"

namespace origami {

namespace {

// Guards relative to R: |a_y| below this routes to the degenerate returns.
constexpr double kAyGuard = 1e-6;
constexpr double kXGuard = 1e-9;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct Unit {
    double ax, ay, bx, by;
};

Unit normalized(const FoldConfig& cfg) {
    cfg.validate();
    const double R = cfg.scale;
    return {cfg.a.x / R, cfg.a.y / R, cfg.b.x / R, cfg.b.y / R};
}

void require_ay(double ay, const char* who) {
    if (std::abs(ay) < kAyGuard) {
        throw DegenerateInput(fmt::format("{}: A lies on the x-axis (a_y = {})", who, ay));
    }
}

double position_on_target(const FoldConfig& cfg, Point b_image) {
    const double R = cfg.scale;
    return std::visit(Overloaded{
                          [&](const Oblique& o) {
                              return (b_image.x * std::cos(o.alpha) + b_image.y * std::sin(o.alpha)) / R;
                          },
                          [&](const Vertical&) { return b_image.y / R; },
                          [&](const Horizontal&) { return b_image.x / R; },
                          [&](const ParallelLines&) { return b_image.x / R; },
                      },
                      cfg.mode);
}

// Crease for a given X: the perpendicular bisector of A and A′ = (a_x − X, 0).
// In units of R its equation is X·x + a_y·y = (a_y² + 2a_x·X − X²)/2.
FoldSolution finish(const FoldConfig& cfg, const Unit& u, double X) {
    const double R = cfg.scale;
    FoldSolution s;
    s.X = X;
    s.crease = Line::from_equation(X, u.ay, 0.5 * (u.ay * u.ay + 2.0 * u.ax * X - X * X) * R);
    s.a_image = reflect_point(cfg.a, s.crease);
    s.b_image = reflect_point(cfg.b, s.crease);
    if (std::abs(X) > kXGuard) {
        s.r = 0.5 * (u.ay * u.ay / X + 2.0 * u.ax - X);
    }
    s.y_tilde = position_on_target(cfg, s.b_image);
    s.residual_a = distance_point_line(s.a_image, cfg.target_a()) / R;
    s.residual_b = distance_point_line(s.b_image, cfg.target_b()) / R;
    return s;
}

}  // namespace

void FoldConfig::validate() const {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw DomainError(fmt::format("length unit R must be positive (got {})", scale));
    }
    if (const auto* o = std::get_if<Oblique>(&mode)) {
        if (!(o->alpha > 0.0 && o->alpha < kPi / 2)) {
            throw DomainError(fmt::format("alpha must lie strictly inside (0, pi/2) (got {})", o->alpha));
        }
    }
    if (const auto* p = std::get_if<ParallelLines>(&mode); p && !std::isfinite(p->d)) {
        throw DomainError("parallel offset d must be finite");
    }
}

Line FoldConfig::target_b() const {
    return std::visit(Overloaded{
                          [](const Oblique& o) { return Line::at_angle(o.alpha, Point{}); },
                          [](const Vertical&) { return Line::y_axis(); },
                          [](const Horizontal&) { return Line::x_axis(); },
                          [&](const ParallelLines& p) { return Line::horizontal(p.d * scale); },
                      },
                      mode);
}

Cubic theorem3_cubic(const FoldConfig& cfg) {
    const auto* o = std::get_if<Oblique>(&cfg.mode);
    if (o == nullptr) throw DomainError("theorem3_cubic needs an oblique target axis");
    const Unit u = normalized(cfg);
    require_ay(u.ay, "theorem3_cubic");
    const double t = std::tan(o->alpha);
    if (std::abs(u.by - u.bx * t) < kAyGuard * std::max(1.0, t)) {
        throw DegenerateInput("theorem3_cubic: B already lies on the y' axis");
    }
    return Cubic(1.0, u.bx - 2.0 * u.ax + (u.by - u.ay) / t,
                 u.ay * (2.0 * u.by - u.ay + 2.0 * (u.ax - u.bx) / t),
                 -u.ay * u.ay * (u.bx - (u.ay - u.by) / t));
}

Cubic theorem4_cubic(const FoldConfig& cfg) {
    if (!std::holds_alternative<Vertical>(cfg.mode)) {
        throw DomainError("theorem4_cubic needs a vertical target axis");
    }
    const Unit u = normalized(cfg);
    require_ay(u.ay, "theorem4_cubic");
    if (std::abs(u.bx) < kAyGuard) {
        throw DegenerateInput("theorem4_cubic: B already lies on the y axis (b_x = 0)");
    }
    return Cubic(1.0, u.bx - 2.0 * u.ax, u.ay * (2.0 * u.by - u.ay), -u.ay * u.ay * u.bx);
}

Cubic fold_cubic(const FoldConfig& cfg) {
    if (std::holds_alternative<Oblique>(cfg.mode)) return theorem3_cubic(cfg);
    if (std::holds_alternative<Vertical>(cfg.mode)) return theorem4_cubic(cfg);
    throw DomainError("only oblique and vertical configurations lead to a cubic");
}

FoldSolution alpha0_solve(const FoldConfig& cfg) {
    if (!std::holds_alternative<Horizontal>(cfg.mode)) {
        throw DomainError("alpha0_solve needs a horizontal target");
    }
    const Unit u = normalized(cfg);
    require_ay(u.ay, "alpha0_solve");
    if (std::hypot(u.ax - u.bx, u.ay - u.by) < kAyGuard) {
        throw DegenerateInput("alpha0_solve: A and B coincide");
    }
    if (std::abs(u.ay - u.by) < kXGuard) {
        // Linear case: the crease is the horizontal line y = a_y/2.
        return finish(cfg, u, 0.0);
    }
    double sigma = std::atan2(u.ay - u.by, u.ax - u.bx);
    if (sigma > kPi / 2) sigma -= kPi;
    if (sigma <= -kPi / 2) sigma += kPi;
    const double X = -u.ay * (1.0 - std::cos(sigma)) / std::sin(sigma);
    return finish(cfg, u, X);
}

std::variant<FoldSolution, Infeasible> parallel_solve(const FoldConfig& cfg) {
    const auto* par = std::get_if<ParallelLines>(&cfg.mode);
    if (par == nullptr) throw DomainError("parallel_solve needs a parallel target line");
    const Unit u = normalized(cfg);
    require_ay(u.ay, "parallel_solve");
    const double d = par->d;
    const double dx = u.ax - u.bx;
    const double dy = u.ay - u.by;
    const double dist2 = dx * dx + dy * dy;
    if (dist2 < kAyGuard * kAyGuard) {
        throw DegenerateInput("parallel_solve: A and B coincide");
    }
    const double under = dist2 - d * d;
    const double band = 1e-12 * std::max(1.0, dist2);
    if (under < -band) {
        return Infeasible{-under};
    }
    const double root = std::sqrt(std::max(under, 0.0));
    const double lead = d + u.ay - u.by;
    double X = 0.0;
    if (std::abs(lead) < kXGuard) {
        // b_y = d + a_y: the quadratic term drops out.
        if (std::abs(dx) < kXGuard) {
            throw DegenerateInput("parallel_solve: b_y = d + a_y and a_x = b_x leave X undetermined");
        }
        X = d * u.ay / dx;
    } else {
        X = u.ay / lead * (dx + root);
    }
    if (std::abs(X) < kXGuard) {
        throw DegenerateInput("parallel_solve: X = 0 (vertical move, no proper fold)");
    }
    return finish(cfg, u, X);
}

FoldSolution crease_from_root(const FoldConfig& cfg, double X) {
    const Unit u = normalized(cfg);
    require_ay(u.ay, "crease_from_root");
    if (std::abs(X) < kXGuard) {
        throw DegenerateInput("crease_from_root: X = 0");
    }
    return finish(cfg, u, X);
}

std::vector<FoldSolution> solve_fold(const FoldConfig& cfg) {
    const Cubic c = fold_cubic(cfg);
    const Unit u = normalized(cfg);
    std::vector<FoldSolution> out;
    for (double X : solve_cubic_real(c)) {
        // X = 0 is a genuine horizontal crease here; it just has no intercept r.
        if (std::abs(X) < kXGuard) X = 0.0;
        out.push_back(finish(cfg, u, X));
    }
    return out;
}

}  // namespace origami
