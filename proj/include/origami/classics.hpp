#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "origami/axioms.hpp"
#include "origami/cubic.hpp"
#include "origami/lill.hpp"

namespace origami {

struct HeptagonRoot {
    double x;      // root of x³ − x² − 2x + 1
    double X_hat;  // fold parameter, x·X_hat = 2
    Line crease;
    FoldSolution fold;
};

struct HeptagonResult {
    Cubic polynomial;
    CubicClassification classification;
    std::vector<HeptagonRoot> roots;  // x descending: 2cos(π/7), 2cos(3π/7), 2cos(5π/7)
    Point a_anchor;
    Point b_anchor;
};

HeptagonResult heptagon();

/// Unit square B = (0,0), A = (0,1), C = (1,0), D = (1,1); E = (1, 1/2).
struct SquareThirds {
    Point point;  // AC ∩ BE = (2/3, 1/3)
    std::map<std::string, Crease> creases;  // AC, BE, HJ, FG
    std::map<std::string, Point> points;    // E, H, J, F, G
};

SquareThirds square_thirds();

struct DoublingResult {
    double L = 1.0;
    double s = 0.0;      // C′B on the unit square, root of s³ − s² + s − 1/3
    double ratio = 0.0;  // (1 − s)/s = 2^(1/3)
    double inv_s = 0.0;
    CubicClassification classification;
    /// Square of side L (origin B): X_third, H, J, F, G, C_prime, J_prime,
    /// C_dblprime = (L/s, 0), Y, Z.
    std::map<std::string, Point> points;
    Line crease = Line::x_axis();  // Y–Z, carries C → C′ and J → J′
    double M = 0.0;                // |C C″| = (1/s − 1)L = 2^(1/3)L
    /// Same construction on a square of side L/s, where |BC′| = L and |C′A| = M.
    double rescaled_side = 0.0;
    std::map<std::string, Point> rescaled_points;  // A, C, C_prime, J, J_prime
    double rescaled_M = 0.0;
};

/// Throws DomainError for L <= 0.
DoublingResult double_cube(double L = 1.0);

enum class TrisectionBranch { Alpha, PiMinusAlpha, PiPlusAlpha };
std::string_view to_string(TrisectionBranch b);

struct TrisectionSolution {
    TrisectionBranch which;
    double X_hat = 0.0;
    double theta = 0.0;  // α/3, (α − π)/3 or (α + π)/3; X_hat·tan θ = h
    Crease g;            // carries B onto g3 and E onto g1
    Line g4;             // through B and B′, angle θ
    Line g5;             // through B and Y = g ∩ g3, angle 2θ
    Point B_prime;
    Point E_prime;
    Point G_prime;
    Point Y;
};

/// Frame: B at the origin, E = (0, 2h), G = (0, h); g1: y = x·tan α, g3: y = h.
struct TrisectionResult {
    double alpha = 0.0;
    double h = 0.0;
    Line g1 = Line::x_axis();
    Line g3 = Line::x_axis();
    std::vector<TrisectionSolution> solutions;  // θ ascending

    const TrisectionSolution& branch(TrisectionBranch b) const;
};

/// X̂³ − (3h/tan α)X̂² − 3h²X̂ + h³/tan α.
Cubic trisection_cubic(double alpha, double h);
/// −h⁶(1 + tan²α)²/tan⁴α.
double trisection_discriminant(double alpha, double h);

/// alpha ∈ (0, π/2), h ∈ (0, 1/2); DomainError otherwise.
TrisectionResult trisect(double alpha, double h);

struct AnyTrisection {
    double angle = 0.0;
    double third = 0.0;  // angle/3
    TrisectionResult base;
    TrisectionSolution solution;
};

/// Any angle in (0, 3π/2) except π/2 and π, reduced to the branch of trisect
/// that carries it.
AnyTrisection trisect_any(double angle, double h = 0.25);

}  // namespace origami
