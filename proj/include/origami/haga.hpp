#pragma once

#include <array>
#include <map>
#include <string>

#include "origami/axioms.hpp"

namespace origami {

// Square frame with the origin at B: A = (0, R), C = (R, 0), D = (R, R).

/// Named creases, points and lengths of one corner fold. Labels that do not
/// exist for a particular x (a line meeting a side at infinity, say) are left
/// out of the maps.
struct HagaConstruction {
    double x = 0.0;
    double R = 1.0;
    std::map<std::string, Crease> creases;
    std::map<std::string, Point> points;
    std::map<std::string, double> lengths;

    const Point& point(const std::string& name) const;
    const Crease& crease(const std::string& name) const;
    double length(const std::string& name) const;
};

/// C onto C′ = (xR, R), x ∈ [0, 1). Crease g, midpoint P (always at height
/// R/2), P′ its foot on BC, V/E/F where g meets lines BC/AB/CD, W = image of
/// B, L where the image of side CB meets AB.
HagaConstruction fold_corner_C(double x, double R = 1.0);

/// B onto B′ = (xR, R), x ∈ (0, 1]. Same labels with B and C exchanged: W is
/// the image of C and L lies on CD.
HagaConstruction fold_corner_B(double x, double R = 1.0);

struct HagaSecondTheorem {
    Point S;
    Point PC;
    Point PB;
    double common_length = 0.0;
    HagaConstruction construction;
};

/// B and C both folded onto C′ = (xR, R), x ∈ [0, 1]. S = g ∩ f sits on the
/// vertical median, |SB| = |SC| = |SC′| = (R/2)√((1 + (1−x)²)(1 + x²)), and
/// the midpoints PC, PB of CC′ and BC′ are R/2 apart on the horizontal median.
HagaSecondTheorem haga_second_theorem(double x, double R = 1.0);

struct EgyptianTriangles {
    // Sides as (short leg, long leg, hypotenuse).
    std::array<double, 3> T1;  // F, D, C′
    std::array<double, 3> T2;  // C′, A, L
    std::array<double, 3> T3;  // L, W, E
    double sin_2alpha = 0.0;
    double cos_2alpha = 0.0;
    /// Points of the x = 1/2 fold: C′, P, Q, S, V, W, E, L, G, F (plus corners).
    std::map<std::string, Point> points;
};

/// C folded onto the midpoint of AD. Throws DomainError for R <= 0.
EgyptianTriangles egyptian_triangles(double R = 1.0);

}  // namespace origami
