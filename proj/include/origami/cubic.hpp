#pragma once

#include <vector>

#include "origami/geom.hpp"

namespace origami {

/// c3·X³ + c2·X² + c1·X + c0.
struct Cubic {
    double c3 = 1.0;
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;

    Cubic() = default;
    /// Throws DomainError when all coefficients vanish or any is non-finite.
    Cubic(double c3_, double c2_, double c1_, double c0_);

    double operator()(double x) const { return ((c3 * x + c2) * x + c1) * x + c0; }
    double derivative(double x) const { return (3.0 * c3 * x + 2.0 * c2) * x + c1; }
    double max_abs_coefficient() const;
    /// Divides through by c3. Throws NotCubic when c3 = 0.
    Cubic monic() const;

    friend bool operator==(const Cubic&, const Cubic&) = default;
};

/// Discriminant data of the monic form x³ + a1·x² + a2·x + a3:
///   p = (3·a2 − a1²)/9,  q = (2·a1³/27 − a1·a2/3 + a3)/2,  disc = p³ + q².
/// root_count is the number of distinct real roots: 3 for disc < 0, 1 for
/// disc > 0, and 2 on the zero band (1 for a triple root).
struct CubicClassification {
    double p = 0.0;
    double q = 0.0;
    double disc = 0.0;
    int root_count = 1;
};

constexpr double kDiscriminantBand = 1e-10;

/// `band` is relative to max(|p|³, q²).
CubicClassification classify(const Cubic& c, double band = kDiscriminantBand);

/// Distinct real roots in descending order. Trigonometric form when the
/// discriminant is negative, Cardano otherwise; each root gets three
/// guarded Newton steps. A double root is listed once.
std::vector<double> solve_cubic_real(const Cubic& c, double band = kDiscriminantBand);

/// |c(x)| / (max|coeff|·max(1, |x|³)), the scale-free residual used in checks.
double relative_residual(const Cubic& c, double x);

}  // namespace origami
