#pragma once

#include <array>
#include <utility>
#include <vector>

#include "origami/beloch.hpp"

namespace origami {

enum class Turn { Left, Right };

/// Right-angle chain B→C→D→E→A for the monic cubic x³ + a1·x² + a2·x + a3.
/// Segments have signed lengths 1, a1, a2, a3 with headings east, south,
/// west, north, which puts B at distance 2 from the y-axis and A at height
/// 2a3 above the x-axis. Folding A onto the x-axis and B onto the y-axis then
/// solves X³ + 2a2·X² + 4a1a3·X + 8a3² = 0, and x = 2a3/X.
struct LillChain {
    std::array<Point, 5> vertices;  // B, C, D, E, A
    std::array<Turn, 3> turns;      // at C, D, E
    std::array<int, 4> signs;       // of a0..a3, zero counted as +
    Point a_anchor;
    Point b_anchor;
    std::pair<Line, Line> axes{Line::x_axis(), Line::y_axis()};  // targets of A and B
    std::array<double, 4> monic;    // 1, a1, a2, a3
    double leading = 1.0;           // c3 of the input
};

/// Turn at corner k is Left iff sign(a_{k-1}) != sign(a_k).
/// Throws NotCubic when c3 = 0 and DegenerateInput when the constant term is 0.
LillChain lill_chain(const std::array<double, 4>& coeffs);

struct FoldedRoot {
    double x;
    FoldSolution fold;
};

/// One fold per real root, in descending fold parameter X.
std::vector<FoldedRoot> solve_cubic_by_folding(const std::array<double, 4>& coeffs);

}  // namespace origami
