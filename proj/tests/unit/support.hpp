#pragma once

#include <doctest.h>

#include <random>
#include <string>

#include "origami/geom.hpp"

namespace testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240917);
    return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline origami::Point random_point(double lo = 0.0, double hi = 1.0) {
    return {uniform(lo, hi), uniform(lo, hi)};
}

inline origami::Line random_line() {
    return origami::Line::at_angle(uniform(0.0, origami::kPi), random_point(-1.0, 2.0));
}

inline std::string fixture(const std::string& rel) { return std::string(ORIGAMI_FIXTURES) + "/" + rel; }

}  // namespace testing

#define CHECK_CLOSE(a, b, tol) CHECK(std::abs(double(a) - double(b)) <= double(tol))
#define REQUIRE_CLOSE(a, b, tol) REQUIRE(std::abs(double(a) - double(b)) <= double(tol))
#define CHECK_POINT(p, ex, ey, tol) \
    do {                            \
        CHECK_CLOSE((p).x, ex, tol); \
        CHECK_CLOSE((p).y, ey, tol); \
    } while (0)
