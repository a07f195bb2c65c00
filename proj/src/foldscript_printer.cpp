#include <fmt/format.h>

#include "origami/foldscript.hpp"

namespace origami::fold {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Shortest text that reads back to the same double.
std::string lit(double v) { return fmt::format("{}", v); }

std::string num(const Number& n) {
    std::string body;
    switch (n.kind) {
        case Number::Kind::Literal: body = lit(n.value); break;
        case Number::Kind::Pi: body = "pi"; break;
        case Number::Kind::Deg: body = fmt::format("deg({})", lit(n.value)); break;
    }
    if (n.negated) return "-" + body;
    return body;
}

std::string expr(const Expr& e) {
    return std::visit(Overloaded{
                          [](const Number& n) { return num(n); },
                          [](const PointField& p) { return fmt::format("{}.{}", p.point.id, p.field); },
                          [](const Dist& d) { return fmt::format("dist({}, {})", d.p.id, d.q.id); },
                          [](const LineAngle& l) { return fmt::format("{}.angle", l.line.id); },
                      },
                      e);
}

std::string spec(const LineSpec& s) {
    return std::visit(Overloaded{
                          [](const AxisX&) { return std::string("axis x"); },
                          [](const AxisY&) { return std::string("axis y"); },
                          [](const Through& t) { return fmt::format("through {} {}", t.p.id, t.q.id); },
                          [](const AngleThrough& a) {
                              return fmt::format("angle {} through {}", num(a.theta), a.p.id);
                          },
                          [](const ParallelAt& p) { return fmt::format("parallel {} at {}", p.line.id, num(p.d)); },
                      },
                      s);
}

std::string fold_args(const Fold& f) {
    const auto& a = f.args;
    switch (f.axiom) {
        case Axiom::O1: return fmt::format("o1 {} {}", a[0].id, a[1].id);
        case Axiom::O2: return fmt::format("o2 {} -> {}", a[0].id, a[1].id);
        case Axiom::O3: return fmt::format("o3 {} {}", a[0].id, a[1].id);
        case Axiom::O4: return fmt::format("o4 {} through {}", a[0].id, a[1].id);
        case Axiom::O5: return fmt::format("o5 {} -> {} through {}", a[0].id, a[1].id, a[2].id);
        case Axiom::O6: return fmt::format("o6 {} -> {}, {} -> {}", a[0].id, a[1].id, a[2].id, a[3].id);
        case Axiom::O7: return fmt::format("o7 {} -> {} perp {}", a[0].id, a[1].id, a[2].id);
    }
    return {};
}

std::string statement(const StatementBody& b) {
    return std::visit(
        Overloaded{
            [](const DefPoint& p) { return fmt::format("point {} = ({}, {})", p.name.id, num(p.x), num(p.y)); },
            [](const DefLine& l) { return fmt::format("line {} = {}", l.name.id, spec(l.spec)); },
            [](const Fold& f) {
                std::string s = fmt::format("fold {} = {}", f.name.id, fold_args(f));
                if (f.choose) s += fmt::format(" choose {}", *f.choose);
                return s;
            },
            [](const Reflect& r) { return fmt::format("reflect {} = {} over {}", r.name.id, r.point.id, r.crease.id); },
            [](const Intersect& i) { return fmt::format("intersect {} = {} {}", i.name.id, i.l1.id, i.l2.id); },
            [](const AssertNear& a) {
                return fmt::format("assert_near {} {} {}", expr(a.lhs), expr(a.rhs), num(a.tol));
            },
            [](const Emit& e) {
                std::string s = "emit";
                for (const auto& n : e.names) s += " " + n.id;
                return s;
            },
        },
        b);
}

}  // namespace

std::string print(const ScriptAst& ast) {
    std::string out = fmt::format("foldscript {}\n", ast.version);
    for (const auto& st : ast.statements) {
        out += statement(st.body);
        out += '\n';
    }
    return out;
}

}  // namespace origami::fold
