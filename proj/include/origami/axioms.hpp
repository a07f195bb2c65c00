#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "origami/geom.hpp"

namespace origami {

enum class FoldKind { O1, O2, O3, O4, O5, O6, O7, Derived };

std::string_view to_string(FoldKind kind);

struct MovedPair {
    Point source;
    Point image;
    friend bool operator==(const MovedPair&, const MovedPair&) = default;
};

/// A fold line together with the points it was asked to move. The
/// constructor checks that every pair is mirror-symmetric across the line.
class Crease {
public:
    Crease(Line line, FoldKind kind, std::vector<MovedPair> moved = {}, const Tolerance& tol = {});

    const Line& line() const { return line_; }
    FoldKind kind() const { return kind_; }
    const std::vector<MovedPair>& moved_pairs() const { return moved_; }

    friend bool operator==(const Crease&, const Crease&) = default;

private:
    Line line_;
    FoldKind kind_;
    std::vector<MovedPair> moved_;
};

/// Square with positively oriented corners A, B, C, D; `creases` holds the
/// five folds c1..c5 that produced it.
struct Square {
    Point a, b, c, d;
    double side = 1.0;
    std::array<Crease, 5> creases;
};

// O1: the line through p and q.
Crease o1_connect(Point p, Point q, const Tolerance& tol = {});
// O2: the perpendicular bisector of p and q.
Crease o2_fold_point_to_point(Point p, Point q, const Tolerance& tol = {});

enum class O3Case { Intersecting, Parallel, Coincident };
struct O3Result {
    O3Case kind;
    std::vector<Crease> creases;  // two bisectors, one midline, or l1 itself
};
// O3: fold l1 onto l2. Coincident input returns l1 itself rather than failing.
O3Result o3_fold_line_to_line(const Line& l1, const Line& l2, const Tolerance& tol = {});
// O4: perpendicular to l through p.
Crease o4_perpendicular(const Line& l, Point p);
// O5: creases through q that carry p onto l. Zero, one (tangent) or two,
// ordered by descending X = (foot(p) − p′)·dir(l).
std::vector<Crease> o5_point_to_line_through_point(Point p, const Line& l, Point q,
                                                   const Tolerance& tol = {});
// O7: the crease perpendicular to l2 that carries p onto l1 (if any).
std::vector<Crease> o7_point_to_line_perp(Point p, const Line& l1, const Line& l2,
                                          const Tolerance& tol = {});

Square construct_square(const Line& c1, Point a, double side, const Tolerance& tol = {});

/// Numeric ground truth for the simultaneous fold: every crease g with
/// reflect(A, g) ∈ l1 and reflect(B, g) ∈ l2. The image A′ sweeps l1 through
/// a compactified parameter t = scale·tan(u); sign changes of the signed
/// distance of reflect(B) to l2 are bracketed and bisected. Results are
/// deduplicated and ordered by descending X = (foot(A) − A′)·dir(l1).
std::vector<Crease> o6_simultaneous_oracle(Point a, Point b, const Line& l1, const Line& l2,
                                           const Tolerance& tol = {});

/// The X coordinate used to order fold solutions: how far the image of p
/// sits behind the foot of p along the canonical direction of l.
double fold_offset(Point p, Point image, const Line& l);

}  // namespace origami
