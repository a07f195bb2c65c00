#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "origami/classics.hpp"
#include "origami/svg.hpp"
#include "support.hpp"

using namespace origami;

namespace {

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Same defaults as `origami render`: unit square outlined.
RenderSpec spec_for(const nlohmann::json& entry) {
    RenderSpec s;
    s.square = 1.0;
    if (entry.contains("window")) {
        const auto& w = entry["window"];
        s.window = {w[0], w[1], w[2], w[3]};
    }
    for (const auto& h : entry.value("highlight", nlohmann::json::array())) {
        const std::string pair = h;
        const auto colon = pair.find(':');
        s.highlights.emplace_back(pair.substr(0, colon), pair.substr(colon + 1));
    }
    return s;
}

int count(const std::string& text, const std::string& needle) {
    int n = 0;
    for (size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
    return n;
}

// x1 y1 x2 y2 of the element with the given id.
std::array<double, 4> segment(const std::string& svg, const std::string& id) {
    const std::regex re("id=\"" + id + "\"[^>]*x1=\"([-0-9.]+)\" y1=\"([-0-9.]+)\" x2=\"([-0-9.]+)\" y2=\"([-0-9.]+)\"");
    std::smatch m;
    REQUIRE(std::regex_search(svg, m, re));
    return {std::stod(m[1]), std::stod(m[2]), std::stod(m[3]), std::stod(m[4])};
}

}  // namespace

TEST_SUITE("svg") {

TEST_CASE("empty state draws the frame only") {
    const std::string svg = render({}, RenderSpec{});
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(count(svg, "<rect id=\"frame\"") == 1);
    CHECK(count(svg, "<line") == 0);
    CHECK(count(svg, "<circle") == 0);
    CHECK(count(svg, "<polygon") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("spec validation") {
    RenderSpec s;
    s.width = 0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = {};
    s.window = {1, 1, 0, 1};
    CHECK_THROWS_AS(render({}, s), DomainError);
    s = {};
    s.precision = 13;
    CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("screen mapping") {
    RenderSpec s;
    const Point a = to_screen({-0.1, -0.1}, s);
    CHECK_POINT(a, 0.0, 600.0, 1e-9);
    const Point b = to_screen({1.1, 1.1}, s);
    CHECK_POINT(b, 600.0, 0.0, 1e-9);
    for (int prec : {0, 2, 4, 8}) {
        s.precision = prec;
        for (int i = 0; i < 100; ++i) {
            const Point w = testing::random_point(-0.1, 1.1);
            const Point sc = to_screen(w, s);
            const double rx = std::round(sc.x * std::pow(10, prec)) / std::pow(10, prec);
            const double ry = std::round(sc.y * std::pow(10, prec)) / std::pow(10, prec);
            const Point back = to_world({rx, ry}, s);
            CHECK(distance(back, w) <= std::pow(10.0, -prec));
        }
    }
}

TEST_CASE("highlights need known points") {
    fold::FoldState st = fold::run("foldscript 1\npoint A = (0, 0)\npoint B = (1, 1)\n");
    RenderSpec s;
    s.highlights = {{"A", "B"}};
    CHECK(render(st, s).find("id=\"hl-A-B\"") != std::string::npos);
    s.highlights = {{"A", "Z"}};
    CHECK_THROWS_AS(render(st, s), UnknownName);
}

TEST_CASE("labels and layers") {
    const fold::FoldState st =
        fold::run("foldscript 1\npoint C_prime = (0.5, 0.5)\npoint C_dblprime = (0.2, 0.2)\nline L = axis x\n");
    RenderSpec s;
    const std::string svg = render(st, s);
    CHECK(svg.find(">C′</text>") != std::string::npos);
    CHECK(svg.find(">C″</text>") != std::string::npos);
    s.layers.labels = false;
    s.layers.creases = false;
    const std::string bare = render(st, s);
    CHECK(count(bare, "<text") == 0);
    CHECK(count(bare, "<line") == 0);
    CHECK(count(bare, "<circle") == 2);
}

TEST_CASE("lines outside the window are dropped") {
    const fold::FoldState st = fold::run("foldscript 1\npoint P = (0, 5)\nline far = angle 0 through P\n");
    CHECK(count(render(st, RenderSpec{}), "<line") == 0);
}

TEST_CASE("trisection rendering") {
    const fold::FoldState st = fold::run(slurp(testing::fixture("scripts/trisect_x1.fold")));
    RenderSpec s;
    s.square = 1.0;
    s.window = {-0.1, 0.7, -0.1, 0.7};
    s.highlights = {{"G", "Bp"}};
    const std::string svg = render(st, s);
    for (const char* id : {"crease-g", "line-g1", "line-g4", "line-g5", "hl-G-Bp"}) {
        CHECK(count(svg, std::string("id=\"") + id + "\"") == 1);
    }
    CHECK(count(svg, "class=\"crease\"") == 1);
    CHECK(count(svg, "class=\"highlight\"") == 1);

    // The fat segment runs from G to B′ = (X1, h) of the closed-form trisection.
    const TrisectionSolution x1 = trisect(kPi / 3, 0.2).branch(TrisectionBranch::Alpha);
    const auto seg = segment(svg, "hl-G-Bp");
    const Point g = to_screen({0, 0.2}, s);
    const Point bp = to_screen(x1.B_prime, s);
    CHECK_POINT(Point(seg[0], seg[1]), g.x, g.y, 1e-4);
    CHECK_POINT(Point(seg[2], seg[3]), bp.x, bp.y, 1e-4);
    // The crease passes through the screen images of its endpoints' world points.
    const auto cr = segment(svg, "crease-g");
    const Point p1 = to_world({cr[0], cr[1]}, s), p2 = to_world({cr[2], cr[3]}, s);
    CHECK(distance_point_line(p1, x1.g.line()) < 1e-5);
    CHECK(distance_point_line(p2, x1.g.line()) < 1e-5);
}

TEST_CASE("fixture renders match the goldens and are deterministic") {
    const auto manifest = nlohmann::json::parse(slurp(testing::fixture("render_manifest.json")));
    CHECK(manifest.size() == 17);
    for (const auto& [name, entry] : manifest.items()) {
        CAPTURE(name);
        const std::string text = slurp(testing::fixture("scripts/" + name + ".fold"));
        const RenderSpec s = spec_for(entry);
        const std::string first = render(fold::run(text), s);
        const std::string second = render(fold::run(text), s);
        CHECK(first == second);
        const std::string golden_path = testing::fixture("golden/" + name + ".svg");
        REQUIRE(std::filesystem::exists(golden_path));
        CHECK(first == slurp(golden_path));
    }
}

}
