#include "origami/geom.hpp"
#include "support.hpp"

using namespace origami;
using testing::random_line;
using testing::random_point;

TEST_SUITE("geom") {

TEST_CASE("tolerance and point preconditions") {
    CHECK_NOTHROW(Tolerance(1e-9, 1e-9));
    CHECK_THROWS_AS(Tolerance(0.0, 1e-9), DomainError);
    CHECK_THROWS_AS(Tolerance(1e-9, -1.0), DomainError);
    CHECK_THROWS_AS(Point(std::nan(""), 0.0), DomainError);
    CHECK_THROWS_AS(Point(0.0, INFINITY), DomainError);
}

TEST_CASE("line canonical form") {
    const Line a = Line::from_equation(-2.0, 0.0, -6.0);
    CHECK(a.nx() == 1.0);
    CHECK(a.ny() == 0.0);
    CHECK(a.offset() == 3.0);
    CHECK(Line::from_equation(0.0, -1.0, 2.0) == Line::horizontal(-2.0));
    CHECK_THROWS_AS(Line::from_equation(0.0, 0.0, 1.0), DegenerateInput);
    for (int i = 0; i < 200; ++i) {
        const double a1 = testing::uniform(-3, 3), b1 = testing::uniform(-3, 3), c1 = testing::uniform(-3, 3);
        const Line l = Line::from_equation(a1, b1, c1);
        CHECK(Line::from_equation(-a1, -b1, -c1) == l);
        CHECK(Line::from_equation(l.nx(), l.ny(), l.offset()) == l);
        CHECK_CLOSE(std::hypot(l.nx(), l.ny()), 1.0, 1e-15);
        CHECK((l.nx() > 0.0 || (l.nx() == 0.0 && l.ny() > 0.0)));
    }
}

TEST_CASE("reflect_point examples") {
    const Line diag = Line::from_equation(1.0, -1.0, 0.0);
    const Point on{0.3, 0.3};
    CHECK_POINT(reflect_point(on, diag), 0.3, 0.3, 1e-15);
    CHECK_POINT(reflect_point({0.0, 1.0}, Line::x_axis()), 0.0, -1.0, 0.0);

    // Example 1 crease: slope −X/a_y through (r, 0).
    const double X = 0.783927913167884;
    const double ay = 0.2;
    const double r = 0.433548593312616;
    const Line g = Line::from_equation(X / ay, 1.0, X / ay * r);
    const Point img = reflect_point({0.8, 0.2}, g);
    CHECK_CLOSE(img.x, 0.0160720868, 1e-9);
    CHECK_CLOSE(img.y, 0.0, 1e-12);
}

TEST_CASE("intersect_lines examples") {
    const auto o = intersect_lines(Line::x_axis(), Line::y_axis());
    REQUIRE(std::holds_alternative<Point>(o));
    CHECK_POINT(std::get<Point>(o), 0.0, 0.0, 0.0);

    const Line y_eq_x = Line::from_equation(-1.0, 1.0, 0.0);
    const Line y_eq_x1 = Line::from_equation(-1.0, 1.0, 1.0);
    CHECK(std::holds_alternative<Parallel>(intersect_lines(y_eq_x, y_eq_x1)));
    CHECK(std::holds_alternative<Coincident>(intersect_lines(y_eq_x, Line::from_equation(2.0, -2.0, 0.0))));

    // y = x/2 and y = −x + 1.
    const auto third = intersect_lines(Line::from_equation(-0.5, 1.0, 0.0), Line::from_equation(1.0, 1.0, 1.0));
    REQUIRE(std::holds_alternative<Point>(third));
    CHECK_POINT(std::get<Point>(third), 2.0 / 3.0, 1.0 / 3.0, 1e-15);
}

TEST_CASE("line_through examples") {
    CHECK(near(line_through({0, 0}, {1, 0}), Line::x_axis()));
    const Line d = line_through({0, 0}, {1, 1});
    CHECK_CLOSE(d.nx(), std::sqrt(0.5), 1e-15);
    CHECK_CLOSE(d.ny(), -std::sqrt(0.5), 1e-15);
    CHECK_CLOSE(d.offset(), 0.0, 1e-15);
    CHECK_THROWS_AS(line_through({1, 1}, {1, 1 + 1e-12}), DegenerateInput);

    // g5 at α = 60°, h = 0.2: B = (0,0), Y = (h/tan 2σ, h), σ = 20°.
    const double h = 0.2;
    const double two_sigma = deg_to_rad(40.0);
    const Line g5 = line_through({0, 0}, {h / std::tan(two_sigma), h});
    const Point dir = g5.direction();
    CHECK_CLOSE(dir.y / dir.x, std::tan(two_sigma), 1e-14);
}

TEST_CASE("perpendicular_through examples") {
    CHECK(near(perpendicular_through(Line::x_axis(), {3, 5}), Line::vertical(3)));
    const Line anti = perpendicular_through(Line::from_equation(-1, 1, 0), {0, 0});
    CHECK(near(anti, Line::from_equation(1, 1, 0)));

    // Perpendicular bisector of A and A′ equals the closed-form crease g_A.
    const double ax = 0.8, ay = 0.2, X = 0.35;
    const Point A{ax, ay};
    const Point Ap{ax - X, 0.0};
    const Line gA = perpendicular_through(line_through(A, Ap), midpoint(A, Ap));
    // y = −(X/a_y)(x + (X − a_y²/X − 2a_x)/2)
    for (double x : {-1.0, 0.0, 0.4, 2.0}) {
        const double y = -(X / ay) * (x + 0.5 * (X - ay * ay / X - 2.0 * ax));
        CHECK_CLOSE(gA.signed_distance({x, y}), 0.0, 1e-12);
    }
}

TEST_CASE("metric helpers") {
    CHECK(distance_point_line({0, 1}, Line::x_axis()) == 1.0);
    CHECK_POINT(midpoint({0, 0}, {1, 1}), 0.5, 0.5, 0.0);
    CHECK(angle_of(Line::x_axis()) == 0.0);
    CHECK_CLOSE(angle_of(Line::y_axis()), kPi / 2, 1e-15);
    // g4 at α = 60°: y = tan(σ)x with 3σ = α.
    const Line g4 = Line::at_angle(deg_to_rad(60.0) / 3.0, {0, 0});
    CHECK_CLOSE(angle_of(g4), kPi / 9, 1e-15);
    CHECK_CLOSE(angle_of(Line::at_angle(-kPi / 4, {0, 0})), 3 * kPi / 4, 1e-15);
}

TEST_CASE("geometric properties on random data") {
    for (int i = 0; i < 500; ++i) {
        const Point p = random_point(-2, 2);
        const Line l = random_line();
        const Point q = reflect_point(p, l);
        CHECK(near(reflect_point(q, l), p));
        CHECK_CLOSE(distance_point_line(q, l), distance_point_line(p, l), 1e-12);
        CHECK_CLOSE(distance(p, q), 2.0 * distance_point_line(p, l), 1e-12);

        const Line perp = perpendicular_through(l, p);
        CHECK_CLOSE(perp.signed_distance(p), 0.0, 1e-12);
        CHECK_CLOSE(dot(perp.normal(), l.normal()), 0.0, 1e-12);

        const Line m = random_line();
        const auto hit = intersect_lines(l, m);
        if (const Point* x = std::get_if<Point>(&hit)) {
            const double scale = std::max(1.0, norm(*x));
            CHECK(distance_point_line(*x, l) <= 1e-9 * scale);
            CHECK(distance_point_line(*x, m) <= 1e-9 * scale);
        }
    }
}

}
