#include "origami/lill.hpp"

#include <fmt/format.h>

#include "origami/errors.hpp"

namespace origami {

namespace {

int sign_of(double v) { return v < 0.0 ? -1 : 1; }

}  // namespace

LillChain lill_chain(const std::array<double, 4>& coeffs) {
    const Cubic m = Cubic(coeffs[0], coeffs[1], coeffs[2], coeffs[3]).monic();
    const double a1 = m.c2;
    const double a2 = m.c1;
    const double a3 = m.c0;
    if (a3 == 0.0) {
        throw DegenerateInput("lill_chain: constant term is zero (x = 0 is a root; divide it out)");
    }
    LillChain ch;
    ch.leading = coeffs[0];
    ch.monic = {1.0, a1, a2, a3};
    const Point b{-2.0, a1 + a3};
    const Point c = b + Point{1.0, 0.0};
    const Point d = c + Point{0.0, -a1};
    const Point e = d + Point{-a2, 0.0};
    const Point a = e + Point{0.0, a3};
    ch.vertices = {b, c, d, e, a};
    for (int k = 0; k < 4; ++k) ch.signs[k] = sign_of(ch.monic[k]);
    for (int k = 0; k < 3; ++k) {
        ch.turns[k] = ch.signs[k] != ch.signs[k + 1] ? Turn::Left : Turn::Right;
    }
    ch.a_anchor = a;
    ch.b_anchor = b;
    ch.axes = {Line::x_axis(), Line::y_axis()};
    return ch;
}

std::vector<FoldedRoot> solve_cubic_by_folding(const std::array<double, 4>& coeffs) {
    const LillChain ch = lill_chain(coeffs);
    FoldConfig cfg{ch.a_anchor, ch.b_anchor, Vertical{}, 1.0};
    std::vector<FoldedRoot> out;
    for (auto& s : solve_fold(cfg)) {
        out.push_back({2.0 * ch.monic[3] / s.X, s});
    }
    return out;
}

}  // namespace origami
