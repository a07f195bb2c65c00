#include <fmt/format.h>

#include "origami/foldscript.hpp"

namespace origami::fold {

bool FoldState::contains(const std::string& name) const {
    return points.count(name) || lines.count(name) || creases.count(name);
}

const Point& FoldState::point(const std::string& name) const {
    const auto it = points.find(name);
    if (it == points.end()) throw UnknownName(fmt::format("no point named '{}'", name));
    return it->second;
}

const Line& FoldState::line(const std::string& name) const {
    if (const auto it = lines.find(name); it != lines.end()) return it->second;
    if (const auto it = creases.find(name); it != creases.end()) return it->second.line();
    throw UnknownName(fmt::format("no line or crease named '{}'", name));
}

const Crease& FoldState::crease(const std::string& name) const {
    const auto it = creases.find(name);
    if (it == creases.end()) throw UnknownName(fmt::format("no crease named '{}'", name));
    return it->second;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string_view axiom_name(Axiom a) {
    static constexpr std::string_view names[] = {"o1", "o2", "o3", "o4", "o5", "o6", "o7"};
    return names[static_cast<int>(a)];
}

class Evaluator {
public:
    explicit Evaluator(const Tolerance& tol) : tol_(tol) {}

    FoldState run(const ScriptAst& ast) {
        for (const auto& st : ast.statements) {
            span_ = st.span;
            try {
                std::visit([&](const auto& body) { exec(body); }, st.body);
            } catch (const EvalError&) {
                throw;
            } catch (const Error& e) {
                throw EvalError(st.span, e.what());
            }
        }
        return std::move(state_);
    }

private:
    const char* kind_name(const std::string& id) const {
        if (state_.points.count(id)) return "a point";
        if (state_.lines.count(id)) return "a line";
        return "a crease";
    }

    Point point(const Name& n) const {
        if (const auto it = state_.points.find(n.id); it != state_.points.end()) return it->second;
        if (state_.contains(n.id)) {
            throw EvalError(n.span, fmt::format("'{}' is {}, expected a point", n.id, kind_name(n.id)));
        }
        throw EvalError(n.span, fmt::format("undefined point '{}'", n.id));
    }

    Line line(const Name& n) const {
        if (const auto it = state_.lines.find(n.id); it != state_.lines.end()) return it->second;
        if (const auto it = state_.creases.find(n.id); it != state_.creases.end()) return it->second.line();
        if (state_.contains(n.id)) {
            throw EvalError(n.span, fmt::format("'{}' is a point, expected a line or crease", n.id));
        }
        throw EvalError(n.span, fmt::format("undefined line '{}'", n.id));
    }

    void claim(const Name& n) const {
        if (state_.contains(n.id)) {
            throw EvalError(n.span, fmt::format("'{}' is already defined", n.id));
        }
    }

    void add(const Name& n, Point p) {
        claim(n);
        state_.points.emplace(n.id, p);
        state_.order.emplace_back(EntityKind::Point, n.id);
    }
    void add(const Name& n, Line l) {
        claim(n);
        state_.lines.emplace(n.id, l);
        state_.order.emplace_back(EntityKind::Line, n.id);
    }
    void add(const Name& n, Crease c) {
        claim(n);
        state_.creases.emplace(n.id, std::move(c));
        state_.order.emplace_back(EntityKind::Crease, n.id);
    }

    void exec(const DefPoint& p) { add(p.name, Point{p.x.eval(), p.y.eval()}); }

    void exec(const DefLine& d) {
        const Line l = std::visit(Overloaded{
                                      [](const AxisX&) { return Line::x_axis(); },
                                      [](const AxisY&) { return Line::y_axis(); },
                                      [&](const Through& t) {
                                          const Point p = point(t.p);
                                          return line_through(p, point(t.q), tol_);
                                      },
                                      [&](const AngleThrough& a) { return Line::at_angle(a.theta.eval(), point(a.p)); },
                                      [&](const ParallelAt& p) { return line(p.line).shifted(p.d.eval()); },
                                  },
                                  d.spec);
        add(d.name, l);
    }

    void exec(const Fold& f) {
        const auto& a = f.args;
        std::vector<Crease> sols;
        // Resolve arguments left to right so the first bad name is the one reported.
        switch (f.axiom) {
            case Axiom::O1: {
                const Point p = point(a[0]);
                const Point q = point(a[1]);
                sols.push_back(o1_connect(p, q, tol_));
                break;
            }
            case Axiom::O2: {
                const Point p = point(a[0]);
                const Point q = point(a[1]);
                sols.push_back(o2_fold_point_to_point(p, q, tol_));
                break;
            }
            case Axiom::O3: {
                const Line l1 = line(a[0]);
                const Line l2 = line(a[1]);
                sols = o3_fold_line_to_line(l1, l2, tol_).creases;
                break;
            }
            case Axiom::O4: {
                const Line l = line(a[0]);
                const Point p = point(a[1]);
                sols.push_back(o4_perpendicular(l, p));
                break;
            }
            case Axiom::O5: {
                const Point p = point(a[0]);
                const Line l = line(a[1]);
                const Point q = point(a[2]);
                sols = o5_point_to_line_through_point(p, l, q, tol_);
                break;
            }
            case Axiom::O6: {
                const Point p = point(a[0]);
                const Line l1 = line(a[1]);
                const Point q = point(a[2]);
                const Line l2 = line(a[3]);
                sols = o6_simultaneous_oracle(p, q, l1, l2, tol_);
                break;
            }
            case Axiom::O7: {
                const Point p = point(a[0]);
                const Line l1 = line(a[1]);
                const Line l2 = line(a[2]);
                sols = o7_point_to_line_perp(p, l1, l2, tol_);
                break;
            }
        }
        const auto n = static_cast<int>(sols.size());
        const std::string_view ax = axiom_name(f.axiom);
        if (n == 0) {
            throw EvalError(span_, fmt::format("{} has no solution for these inputs", ax));
        }
        int pick = 1;
        if (f.choose) {
            pick = *f.choose;
            if (pick > n) {
                throw EvalError(span_, fmt::format("choose {} but {} has only {} solution{}", pick, ax, n,
                                                   n == 1 ? "" : "s"));
            }
        } else if (n > 1) {
            throw EvalError(span_, fmt::format("{} has {} solutions; add 'choose k' with k in 1..{}", ax, n, n));
        }
        add(f.name, sols[pick - 1]);
    }

    void exec(const Reflect& r) {
        const Point p = point(r.point);
        add(r.name, reflect_point(p, line(r.crease)));
    }

    void exec(const Intersect& i) {
        const Line l1 = line(i.l1);
        const auto hit = intersect_lines(l1, line(i.l2), tol_);
        if (std::holds_alternative<Parallel>(hit)) {
            throw EvalError(span_, fmt::format("'{}' and '{}' are parallel", i.l1.id, i.l2.id));
        }
        if (std::holds_alternative<Coincident>(hit)) {
            throw EvalError(span_, fmt::format("'{}' and '{}' coincide", i.l1.id, i.l2.id));
        }
        add(i.name, std::get<Point>(hit));
    }

    double value(const Expr& e) const {
        return std::visit(Overloaded{
                              [](const Number& n) { return n.eval(); },
                              [&](const PointField& p) {
                                  const Point q = point(p.point);
                                  return p.field == 'x' ? q.x : q.y;
                              },
                              [&](const Dist& d) {
                                  const Point p = point(d.p);
                                  return distance(p, point(d.q));
                              },
                              [&](const LineAngle& l) { return angle_of(line(l.line)); },
                          },
                          e);
    }

    void exec(const AssertNear& a) {
        const double lhs = value(a.lhs);
        const double rhs = value(a.rhs);
        const double tol = a.tol.eval();
        if (!(tol >= 0.0)) {
            throw EvalError(a.tol.span, "assert_near tolerance must be non-negative");
        }
        if (!(std::abs(lhs - rhs) <= tol)) {
            throw AssertionFailure(span_,
                                   fmt::format("assert_near failed: {:.12g} vs {:.12g} (|diff| = {:.3g} > {:.3g})",
                                               lhs, rhs, std::abs(lhs - rhs), tol),
                                   lhs, rhs);
        }
        ++state_.assertions_checked;
    }

    void exec(const Emit& e) {
        for (const auto& n : e.names) {
            if (!state_.contains(n.id)) throw EvalError(n.span, fmt::format("cannot emit undefined '{}'", n.id));
            state_.emitted.push_back(n.id);
        }
    }

    Tolerance tol_;
    FoldState state_;
    SourceSpan span_;
};

}  // namespace

FoldState eval(const ScriptAst& ast, const Tolerance& tol) { return Evaluator(tol).run(ast); }

FoldState run(std::string_view text, const Tolerance& tol) { return eval(parse(text), tol); }

}  // namespace origami::fold
