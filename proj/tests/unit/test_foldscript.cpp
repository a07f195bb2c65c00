#include <filesystem>
#include <fstream>
#include <sstream>

#include "origami/foldscript.hpp"
#include "support.hpp"

using namespace origami;
using namespace origami::fold;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::filesystem::path> fixture_scripts() {
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(testing::fixture("scripts"))) {
        if (e.path().extension() == ".fold") out.push_back(e.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

SourceSpan parse_error_at(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.span();
    }
    FAIL("expected a parse error");
    return {};
}

SourceSpan eval_error_at(const std::string& text, std::string* msg = nullptr) {
    try {
        run(text);
    } catch (const EvalError& e) {
        if (msg) *msg = e.message();
        return e.span();
    }
    FAIL("expected an evaluation error");
    return {};
}

const char* kExample1 = R"(foldscript 1
point O = (0, 0)
point A = (0.8, 0.2)
point B = (0.5, 0.3)
line X_AXIS = axis x
line DIAG45 = angle deg(45) through O
fold g = o6 A -> X_AXIS, B -> DIAG45 choose 1
reflect Ap = A over g
assert_near Ap.x 0.0160720868 1e-8
)";

}  // namespace

TEST_SUITE("foldscript") {

TEST_CASE("tokens") {
    // "Pé" is not an identifier: é is rejected.
    CHECK_THROWS_AS(tokenize("point Pé = (0, 0)"), ParseError);

    const auto ok = tokenize("fold g = o2 A -> B # comment\n  point P = (-1.5e-2, .5)");
    std::vector<Tok> got;
    for (const auto& k : ok) got.push_back(k.kind);
    const std::vector<Tok> expect{Tok::Ident, Tok::Ident,  Tok::Equals, Tok::Ident,  Tok::Ident,  Tok::Arrow,
                                  Tok::Ident, Tok::Newline, Tok::Ident, Tok::Ident,  Tok::Equals, Tok::LParen,
                                  Tok::Minus, Tok::Number,  Tok::Comma, Tok::Number, Tok::RParen, Tok::End};
    CHECK(got == expect);
    CHECK(ok[9].span == SourceSpan{2, 9});
    CHECK(ok[13].text == "1.5e-2");
    CHECK(ok[15].text == ".5");
}

TEST_CASE("columns count code points") {
    // The comment holds a two-byte character; the error column is on line 2.
    const SourceSpan s = parse_error_at("foldscript 1 # café\npoint A = (0, 0) $\n");
    CHECK(s == SourceSpan{2, 18});
    CHECK(parse_error_at("foldscript 1\n# π\nµ") == SourceSpan{3, 1});
}

TEST_CASE("point statement") {
    const ScriptAst ast = parse("foldscript 1\npoint A = (0.8, 0.2)\n");
    REQUIRE(ast.statements.size() == 1);
    const auto* p = std::get_if<DefPoint>(&ast.statements[0].body);
    REQUIRE(p != nullptr);
    CHECK(p->name.id == "A");
    CHECK(p->x.eval() == 0.8);
    CHECK(p->y.eval() == 0.2);
    CHECK(ast.statements[0].span == SourceSpan{2, 1});
}

TEST_CASE("example 1 script") {
    const FoldState st = run(kExample1);
    CHECK(st.assertions_checked == 1);
    CHECK_CLOSE(st.point("Ap").x, 0.0160720868, 1e-9);
    CHECK(st.crease("g").kind() == FoldKind::O6);
    CHECK(st.order.size() == 7);
    CHECK(st.order.front() == std::pair{EntityKind::Point, std::string("O")});
}

TEST_CASE("parse errors") {
    // o6 with one constraint: reported at its arrow.
    CHECK(parse_error_at("foldscript 1\nfold g = o6 A -> L1\n") == SourceSpan{2, 15});
    CHECK(parse_error_at("point A = (0, 0)\n") == SourceSpan{1, 1});
    CHECK(parse_error_at("foldscript 2\n") == SourceSpan{1, 12});
    CHECK(parse_error_at("foldscript 1\npoint pi = (0, 0)\n") == SourceSpan{2, 7});
    CHECK(parse_error_at("foldscript 1\nfold g = o5 A -> L through Q choose 0\n") == SourceSpan{2, 37});
    CHECK(parse_error_at("foldscript 1\nfold g = o6 A -> L, B -> M choose 1.5\n") == SourceSpan{2, 35});
    CHECK(parse_error_at("foldscript 1\nfold g = o8 A B\n") == SourceSpan{2, 10});
    CHECK(parse_error_at("foldscript 1\nbend g = o1 A B\n") == SourceSpan{2, 1});
    CHECK(parse_error_at("foldscript 1\npoint A = (0, 0) extra\n") == SourceSpan{2, 18});
    CHECK(parse_error_at("foldscript 1\nline L = axis z\n") == SourceSpan{2, 15});
    CHECK(parse_error_at("foldscript 1\nassert_near A.z 0 1\n") == SourceSpan{2, 15});
    CHECK(parse_error_at("foldscript 1\npoint A = (0, 0\n") == SourceSpan{2, 16});

    try {
        parse("foldscript 1\npoint A = 0, 0)\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()) == "2:11: parse error: expected '(', found '0'");
    }
}

TEST_CASE("evaluation errors") {
    std::string msg;
    CHECK(eval_error_at("foldscript 1\npoint A = (0, 0)\nfold g = o2 A -> Q\n", &msg) == SourceSpan{3, 18});
    CHECK(msg == "undefined point 'Q'");

    CHECK(eval_error_at("foldscript 1\nline L = axis x\nfold g = o2 L -> L\n", &msg) == SourceSpan{3, 13});
    CHECK(msg == "'L' is a line, expected a point");

    CHECK(eval_error_at("foldscript 1\npoint A = (0, 0)\nline A = axis x\n", &msg) == SourceSpan{3, 6});
    CHECK(msg == "'A' is already defined");

    const std::string hept = "foldscript 1\npoint A = (1, 2)\npoint B = (-2, 0)\nline X = axis x\nline Y = axis y\n";
    CHECK(eval_error_at(hept + "fold g = o6 A -> X, B -> Y\n", &msg) == SourceSpan{6, 1});
    CHECK(msg == "o6 has 3 solutions; add 'choose k' with k in 1..3");
    CHECK(eval_error_at(hept + "fold g = o6 A -> X, B -> Y choose 4\n", &msg) == SourceSpan{6, 1});
    CHECK(msg == "choose 4 but o6 has only 3 solutions");

    CHECK(eval_error_at("foldscript 1\nline a = axis x\nline b = parallel a at 1\nintersect P = a b\n", &msg) ==
          SourceSpan{4, 1});
    CHECK(msg == "'a' and 'b' are parallel");

    // Kernel failures keep the statement position.
    CHECK(eval_error_at("foldscript 1\npoint A = (0, 0)\nfold g = o2 A -> A\n") == SourceSpan{3, 1});
    CHECK(eval_error_at("foldscript 1\npoint A = (0, 2)\nline X = axis x\npoint Q = (0, 1.5)\n"
                        "fold g = o5 A -> X through Q\n",
                        &msg) == SourceSpan{5, 1});
    CHECK(msg == "o5 has no solution for these inputs");
    CHECK(eval_error_at("foldscript 1\nemit nothing\n") == SourceSpan{2, 6});
    CHECK(eval_error_at("foldscript 1\nassert_near 1 1 -1\n") == SourceSpan{2, 17});
}

TEST_CASE("assertion failure carries both values") {
    try {
        run("foldscript 1\npoint A = (0, 0)\npoint B = (3, 4)\nassert_near dist(A, B) 4.9 0.01\n");
        FAIL("no error");
    } catch (const AssertionFailure& e) {
        CHECK(e.lhs() == 5.0);
        CHECK(e.rhs() == 4.9);
        CHECK(e.span() == SourceSpan{4, 1});
    }
}

TEST_CASE("line specs and expressions") {
    const FoldState st = run(R"(foldscript 1
point P = (1, 1)
point Q = (3, 1)
line a = axis x
line b = axis y
line c = through P Q
line d = angle pi through P
line e = angle -deg(-30) through P
line f = parallel a at 2.5e-1
fold g = o7 P -> a perp b
fold h = o3 a b choose 1
fold k = o4 a through Q
fold m = o1 P Q
reflect R = Q over h
assert_near dist(P, Q) 2 0
assert_near c.angle 0 0
assert_near d.angle 0 1e-15
assert_near e.angle deg(30) 1e-15
assert_near f.angle a.angle 0
assert_near R.x 1 1e-15
assert_near R.y 3 1e-15
emit g h k
)");
    CHECK(near(st.line("f"), Line::horizontal(0.25)));
    CHECK(near(st.line("g"), Line::horizontal(0.5)));
    CHECK(near(st.line("k"), Line::vertical(3)));
    CHECK(st.emitted == std::vector<std::string>{"g", "h", "k"});
    CHECK(st.assertions_checked == 7);
}

TEST_CASE("print then parse round trips") {
    const std::string all = R"(foldscript 1
point A = (-0.1, 1e-3)
point B = (pi, -deg(12.5))
line L = angle -pi through A
line M = parallel L at -0.3333333333333333
line N = through A B
fold a = o1 A B
fold b = o2 A -> B
fold c = o3 L M
fold d = o4 L through A
fold e = o5 A -> L through B choose 2
fold f = o6 A -> L, B -> M choose 3
fold g = o7 A -> L perp M
reflect C = A over f
intersect D = L N
assert_near dist(A, B) C.x 1e-9
assert_near L.angle A.y 0.1
emit A B f
)";
    const ScriptAst ast = parse(all);
    CHECK(parse(print(ast)) == ast);
    CHECK(print(parse(print(ast))) == print(ast));
    for (const auto& p : fixture_scripts()) {
        CAPTURE(p.string());
        const ScriptAst f = parse(slurp(p));
        CHECK(parse(print(f)) == f);
    }
    // Random literals survive printing.
    for (int i = 0; i < 200; ++i) {
        const double v = testing::uniform(-1e3, 1e3) * std::pow(10.0, testing::uniform(-12, 12));
        ScriptAst a = parse("foldscript 1\npoint P = (1, 2)\n");
        auto& x = std::get<DefPoint>(a.statements[0].body).x;
        x.value = std::abs(v);
        x.negated = v < 0;
        CHECK(parse(print(a)) == a);
    }
}

TEST_CASE("fixture scripts run and are deterministic") {
    const auto scripts = fixture_scripts();
    CHECK(scripts.size() == 17);
    for (const auto& p : scripts) {
        CAPTURE(p.string());
        const std::string text = slurp(p);
        const FoldState a = run(text);
        const FoldState b = run(text);
        CHECK(a.assertions_checked > 0);
        CHECK(a.points == b.points);
        CHECK(a.lines == b.lines);
        CHECK(a.creases == b.creases);
        CHECK(a.order == b.order);
        CHECK(a.emitted == b.emitted);
    }
}

}
