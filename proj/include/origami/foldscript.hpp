#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "origami/axioms.hpp"
#include "origami/errors.hpp"

namespace origami::fold {

struct SourceSpan {
    int line = 1;
    int column = 1;
    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

std::string to_string(const SourceSpan& s);

class ParseError : public Error {
public:
    ParseError(SourceSpan span, const std::string& msg);
    SourceSpan span() const { return span_; }
    const std::string& message() const { return msg_; }

private:
    SourceSpan span_;
    std::string msg_;
};

class EvalError : public Error {
public:
    EvalError(SourceSpan span, const std::string& msg);
    SourceSpan span() const { return span_; }
    const std::string& message() const { return msg_; }

private:
    SourceSpan span_;
    std::string msg_;
};

/// Raised by a failing assert_near.
class AssertionFailure : public EvalError {
public:
    AssertionFailure(SourceSpan span, const std::string& msg, double lhs, double rhs);
    double lhs() const { return lhs_; }
    double rhs() const { return rhs_; }

private:
    double lhs_;
    double rhs_;
};

// ---- tokens ----------------------------------------------------------------

enum class Tok { Ident, Number, LParen, RParen, Comma, Equals, Arrow, Dot, Minus, Newline, End };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

std::vector<Token> tokenize(std::string_view text);

// ---- AST -------------------------------------------------------------------
// Equality ignores spans.

struct Number {
    enum class Kind { Literal, Pi, Deg };
    Kind kind = Kind::Literal;
    double value = 0.0;  // the literal, or the argument of deg()
    bool negated = false;
    SourceSpan span;

    double eval() const;
    friend bool operator==(const Number& a, const Number& b) {
        return a.kind == b.kind && a.value == b.value && a.negated == b.negated;
    }
};

struct Name {
    std::string id;
    SourceSpan span;
    friend bool operator==(const Name& a, const Name& b) { return a.id == b.id; }
};

struct AxisX {
    friend bool operator==(const AxisX&, const AxisX&) = default;
};
struct AxisY {
    friend bool operator==(const AxisY&, const AxisY&) = default;
};
struct Through {
    Name p, q;
    friend bool operator==(const Through&, const Through&) = default;
};
struct AngleThrough {
    Number theta;
    Name p;
    friend bool operator==(const AngleThrough&, const AngleThrough&) = default;
};
struct ParallelAt {
    Name line;
    Number d;  // shift along the canonical normal of `line`
    friend bool operator==(const ParallelAt&, const ParallelAt&) = default;
};
using LineSpec = std::variant<AxisX, AxisY, Through, AngleThrough, ParallelAt>;

struct PointField {
    Name point;
    char field;  // 'x' or 'y'
    friend bool operator==(const PointField&, const PointField&) = default;
};
struct Dist {
    Name p, q;
    friend bool operator==(const Dist&, const Dist&) = default;
};
struct LineAngle {
    Name line;
    friend bool operator==(const LineAngle&, const LineAngle&) = default;
};
using Expr = std::variant<Number, PointField, Dist, LineAngle>;

enum class Axiom { O1, O2, O3, O4, O5, O6, O7 };

struct DefPoint {
    Name name;
    Number x, y;
    friend bool operator==(const DefPoint&, const DefPoint&) = default;
};
struct DefLine {
    Name name;
    LineSpec spec;
    friend bool operator==(const DefLine&, const DefLine&) = default;
};
/// Argument order: o1 P Q | o2 P Q | o3 L1 L2 | o4 L P | o5 P L Q |
/// o6 P L1 Q L2 | o7 P L1 L2.
struct Fold {
    Name name;
    Axiom axiom;
    std::vector<Name> args;
    std::optional<int> choose;
    friend bool operator==(const Fold&, const Fold&) = default;
};
struct Reflect {
    Name name, point, crease;
    friend bool operator==(const Reflect&, const Reflect&) = default;
};
struct Intersect {
    Name name, l1, l2;
    friend bool operator==(const Intersect&, const Intersect&) = default;
};
struct AssertNear {
    Expr lhs, rhs;
    Number tol;
    friend bool operator==(const AssertNear&, const AssertNear&) = default;
};
struct Emit {
    std::vector<Name> names;
    friend bool operator==(const Emit&, const Emit&) = default;
};

using StatementBody = std::variant<DefPoint, DefLine, Fold, Reflect, Intersect, AssertNear, Emit>;

struct Statement {
    StatementBody body;
    SourceSpan span;
    friend bool operator==(const Statement& a, const Statement& b) { return a.body == b.body; }
};

struct ScriptAst {
    int version = 1;
    std::vector<Statement> statements;
    friend bool operator==(const ScriptAst& a, const ScriptAst& b) {
        return a.version == b.version && a.statements == b.statements;
    }
};

ScriptAst parse(const std::vector<Token>& tokens);
ScriptAst parse(std::string_view text);

/// Canonical text form; parse(print(ast)) == ast.
std::string print(const ScriptAst& ast);

// ---- evaluation ------------------------------------------------------------

enum class EntityKind { Point, Line, Crease };

struct FoldState {
    std::map<std::string, Point> points;
    std::map<std::string, Line> lines;
    std::map<std::string, Crease> creases;
    std::vector<std::pair<EntityKind, std::string>> order;  // definition order
    std::vector<std::string> emitted;
    int assertions_checked = 0;

    bool contains(const std::string& name) const;
    const Point& point(const std::string& name) const;
    /// A plain line or the line of a crease.
    const Line& line(const std::string& name) const;
    const Crease& crease(const std::string& name) const;
};

FoldState eval(const ScriptAst& ast, const Tolerance& tol = {});
FoldState run(std::string_view text, const Tolerance& tol = {});

}  // namespace origami::fold
