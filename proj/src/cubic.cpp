#include "origami/cubic.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "origami/errors.hpp"

namespace origami {

namespace {

struct Depressed {
    double shift;  // x = t − shift
    CubicClassification cls;
    bool zero_band;
};

Depressed depress(const Cubic& c, double band) {
    const Cubic m = c.monic();
    const double a1 = m.c2;
    const double a2 = m.c1;
    const double a3 = m.c0;
    CubicClassification cls;
    cls.p = (3.0 * a2 - a1 * a1) / 9.0;
    cls.q = 0.5 * (2.0 * a1 * a1 * a1 / 27.0 - a1 * a2 / 3.0 + a3);
    const double p3 = cls.p * cls.p * cls.p;
    const double q2 = cls.q * cls.q;
    cls.disc = p3 + q2;
    const double scale = std::max({std::abs(p3), q2, 1e-300});
    const bool zero_band = std::abs(cls.disc) <= band * scale || (cls.p == 0.0 && cls.q == 0.0);
    if (zero_band) {
        // Double root pair unless the two candidates coincide (triple root).
        const double r = std::cbrt(-cls.q);
        cls.root_count = std::abs(3.0 * r) <= 1e-7 * std::max(1.0, std::abs(a1)) ? 1 : 2;
    } else {
        cls.root_count = cls.disc < 0.0 ? 3 : 1;
    }
    return {a1 / 3.0, cls, zero_band};
}

double polish(const Cubic& m, double x) {
    for (int i = 0; i < 3; ++i) {
        const double d = m.derivative(x);
        if (d == 0.0) break;
        const double next = x - m(x) / d;
        if (!std::isfinite(next) || std::abs(m(next)) > std::abs(m(x))) break;
        x = next;
    }
    return x;
}

}  // namespace

Cubic::Cubic(double c3_, double c2_, double c1_, double c0_) : c3(c3_), c2(c2_), c1(c1_), c0(c0_) {
    for (double v : {c3, c2, c1, c0}) {
        if (!std::isfinite(v)) throw DomainError("cubic coefficients must be finite");
    }
    if (c3 == 0.0 && c2 == 0.0 && c1 == 0.0 && c0 == 0.0) {
        throw DomainError("cubic coefficients are all zero");
    }
}

double Cubic::max_abs_coefficient() const {
    return std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
}

Cubic Cubic::monic() const {
    if (c3 == 0.0) {
        throw NotCubic(fmt::format("leading coefficient is zero ({} X² + {} X + {})", c2, c1, c0));
    }
    return Cubic(1.0, c2 / c3, c1 / c3, c0 / c3);
}

CubicClassification classify(const Cubic& c, double band) {
    return depress(c, band).cls;
}

std::vector<double> solve_cubic_real(const Cubic& c, double band) {
    const Cubic m = c.monic();
    const auto [shift, cls, zero_band] = depress(m, band);
    const double p = cls.p;
    const double q = cls.q;
    // Depressed form t³ + 3p·t + 2q = 0.
    std::vector<double> roots;
    if (zero_band) {
        const double r = std::cbrt(-q);
        roots.push_back(2.0 * r - shift);
        if (cls.root_count == 2) roots.push_back(-r - shift);
    } else if (cls.disc < 0.0) {
        const double amp = 2.0 * std::sqrt(-p);
        const double arg = std::clamp(-q / std::sqrt(-p * p * p), -1.0, 1.0);
        const double phi = std::acos(arg);
        for (int k = 0; k < 3; ++k) {
            roots.push_back(amp * std::cos((phi - 2.0 * kPi * k) / 3.0) - shift);
        }
    } else {
        const double s = std::sqrt(cls.disc);
        // Pick the larger-magnitude radicand first to avoid cancellation.
        const double u = std::cbrt(-q + (q <= 0.0 ? s : -s));
        const double v = u != 0.0 ? -p / u : 0.0;
        roots.push_back(u + v - shift);
    }
    for (double& r : roots) r = polish(m, r);
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

double relative_residual(const Cubic& c, double x) {
    const double ax = std::abs(x);
    return std::abs(c(x)) / (c.max_abs_coefficient() * std::max(1.0, ax * ax * ax));
}

}  // namespace origami
