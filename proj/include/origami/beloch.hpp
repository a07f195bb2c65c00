#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "origami/cubic.hpp"
#include "origami/geom.hpp"

namespace origami {

// Where B must land. A always lands on the x-axis.
struct Oblique {
    double alpha;  // axis y′ through the origin at angle alpha ∈ (0, π/2)
};
struct Vertical {};    // B onto the y-axis (alpha = π/2)
struct Horizontal {};  // B onto the x-axis as well (alpha = 0)
struct ParallelLines {
    double d;  // B onto the line y = d·R
};
using FoldMode = std::variant<Oblique, Vertical, Horizontal, ParallelLines>;

/// A simultaneous-fold problem: carry A onto the x-axis and B onto the
/// mode's target line. Coordinates are absolute; R is the length unit, so
/// the closed forms work with a = A/R and b = B/R.
struct FoldConfig {
    Point a;
    Point b;
    FoldMode mode = Vertical{};
    double scale = 1.0;

    /// Checks R > 0 and, for Oblique, alpha ∈ (0, π/2). Throws DomainError.
    void validate() const;
    Line target_a() const { return Line::x_axis(); }
    Line target_b() const;
};

/// One solved crease. X := a_x − a′_x (units of R). Huzita's own variable is
/// z = X − a_y/tan α; it is not stored.
struct FoldSolution {
    double X = 0.0;
    Line crease = Line::x_axis();
    Point a_image;
    Point b_image;
    /// x-intercept of the crease over R; absent when the crease is horizontal.
    std::optional<double> r;
    /// Position of B′ along its target line, over R.
    double y_tilde = 0.0;
    /// Distances of the images to their target lines, over R.
    double residual_a = 0.0;
    double residual_b = 0.0;
};

struct Infeasible {
    /// d² − |A − B|² (over R²); positive when infeasible.
    double excess = 0.0;
};

/// Monic X-cubic for an oblique target axis:
///   X³ + (b_x − 2a_x + (b_y − a_y)/tan α)·X²
///      + a_y·(2b_y − a_y + 2(a_x − b_x)/tan α)·X
///      − a_y²·(b_x − (a_y − b_y)/tan α) = 0.
/// Throws DegenerateInput when a_y ≈ 0 or B lies on the y′ axis.
Cubic theorem3_cubic(const FoldConfig& cfg);

/// Limit alpha = π/2: X³ + (b_x − 2a_x)X² + a_y(2b_y − a_y)X − a_y²·b_x = 0.
/// Throws DegenerateInput when a_y ≈ 0 or b_x ≈ 0.
Cubic theorem4_cubic(const FoldConfig& cfg);

/// Dispatches to theorem3_cubic / theorem4_cubic.
Cubic fold_cubic(const FoldConfig& cfg);

/// Both A and B onto the x-axis. Returns the root
/// X = −a_y·(1 − cos σ)/sin σ with tan σ = (a_y − b_y)/(a_x − b_x),
/// σ taken in (−π/2, π/2]; X = 0 (horizontal crease) when a_y = b_y.
FoldSolution alpha0_solve(const FoldConfig& cfg);

/// B onto the line y = d. Positive branch
/// X = a_y/(d + a_y − b_y)·(a_x − b_x + √((a_x − b_x)² + (a_y − b_y)² − d²)),
/// Infeasible when d exceeds |A − B|.
std::variant<FoldSolution, Infeasible> parallel_solve(const FoldConfig& cfg);

/// The crease y = −(X/a_y)(x − r·R), r = (a_y²/X + 2a_x − X)/2, with images
/// and residuals. Throws DegenerateInput for X ≈ 0 or a_y ≈ 0.
FoldSolution crease_from_root(const FoldConfig& cfg, double X);

/// Every real solution of an Oblique or Vertical configuration, one per real
/// root, in descending X.
std::vector<FoldSolution> solve_fold(const FoldConfig& cfg);

}  // namespace origami
