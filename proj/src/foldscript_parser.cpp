#include <charconv>
#include <fmt/format.h>

#include "origami/foldscript.hpp"

namespace origami::fold {

double Number::eval() const {
    double v = value;
    if (kind == Kind::Pi) v = kPi;
    if (kind == Kind::Deg) v = deg_to_rad(value);
    return negated ? -v : v;
}

namespace {

std::string_view describe(const Token& t) {
    switch (t.kind) {
        case Tok::Newline: return "end of line";
        case Tok::End: return "end of input";
        default: return t.text;
    }
}

bool reserved(std::string_view id) { return id == "pi" || id == "deg" || id == "dist"; }

class Parser {
public:
    explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

    ScriptAst script() {
        ScriptAst ast;
        skip_newlines();
        const Token& head = peek();
        if (head.kind != Tok::Ident || head.text != "foldscript") {
            throw ParseError(head.span, "script must start with the header 'foldscript 1'");
        }
        next();
        const Token& ver = expect(Tok::Number, "a version number after 'foldscript'");
        if (ver.text != "1") {
            throw ParseError(ver.span, fmt::format("unsupported foldscript version '{}'", ver.text));
        }
        ast.version = 1;
        end_of_statement();
        while (true) {
            skip_newlines();
            if (peek().kind == Tok::End) break;
            ast.statements.push_back(statement());
            end_of_statement();
        }
        return ast;
    }

private:
    const Token& peek(size_t k = 0) const {
        const size_t i = std::min(pos_ + k, toks_.size() - 1);
        return toks_[i];
    }
    const Token& next() {
        const Token& t = peek();
        if (pos_ < toks_.size() - 1) ++pos_;
        return t;
    }
    [[noreturn]] void fail(const Token& t, std::string_view wanted) const {
        throw ParseError(t.span, fmt::format("expected {}, found '{}'", wanted, describe(t)));
    }
    const Token& expect(Tok kind, std::string_view wanted) {
        if (peek().kind != kind) fail(peek(), wanted);
        return next();
    }
    void keyword(std::string_view kw) {
        if (peek().kind != Tok::Ident || peek().text != kw) fail(peek(), fmt::format("'{}'", kw));
        next();
    }
    bool at_keyword(std::string_view kw) const { return peek().kind == Tok::Ident && peek().text == kw; }
    void skip_newlines() {
        while (peek().kind == Tok::Newline) next();
    }
    void end_of_statement() {
        if (peek().kind != Tok::Newline && peek().kind != Tok::End) fail(peek(), "end of line");
    }

    Name name(std::string_view what) {
        const Token& t = peek();
        if (t.kind != Tok::Ident) fail(t, what);
        if (reserved(t.text)) throw ParseError(t.span, fmt::format("'{}' is reserved and cannot be a name", t.text));
        next();
        return {t.text, t.span};
    }

    double literal(const Token& t) const {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            throw ParseError(t.span, fmt::format("malformed number '{}'", t.text));
        }
        return v;
    }

    Number number() {
        Number n;
        n.span = peek().span;
        if (peek().kind == Tok::Minus) {
            next();
            n.negated = true;
        }
        const Token& t = peek();
        if (t.kind == Tok::Number) {
            next();
            n.kind = Number::Kind::Literal;
            n.value = literal(t);
        } else if (at_keyword("pi")) {
            next();
            n.kind = Number::Kind::Pi;
        } else if (at_keyword("deg")) {
            next();
            expect(Tok::LParen, "'(' after deg");
            bool neg = false;
            if (peek().kind == Tok::Minus) {
                next();
                neg = true;
            }
            const Token& arg = expect(Tok::Number, "a number inside deg(...)");
            expect(Tok::RParen, "')'");
            n.kind = Number::Kind::Deg;
            n.value = neg ? -literal(arg) : literal(arg);
        } else {
            fail(t, "a number, pi or deg(...)");
        }
        return n;
    }

    Expr expr() {
        const Token& t = peek();
        if (t.kind == Tok::Number || t.kind == Tok::Minus || at_keyword("pi") || at_keyword("deg")) {
            return number();
        }
        if (at_keyword("dist")) {
            next();
            expect(Tok::LParen, "'(' after dist");
            Dist d;
            d.p = name("a point name");
            expect(Tok::Comma, "','");
            d.q = name("a point name");
            expect(Tok::RParen, "')'");
            return d;
        }
        Name n = name("an expression");
        expect(Tok::Dot, "'.' followed by x, y or angle");
        const Token& f = expect(Tok::Ident, "x, y or angle");
        if (f.text == "x" || f.text == "y") return PointField{n, f.text[0]};
        if (f.text == "angle") return LineAngle{n};
        throw ParseError(f.span, fmt::format("unknown field '{}' (expected x, y or angle)", f.text));
    }

    LineSpec line_spec() {
        const Token& t = peek();
        if (at_keyword("axis")) {
            next();
            const Token& which = expect(Tok::Ident, "x or y");
            if (which.text == "x") return AxisX{};
            if (which.text == "y") return AxisY{};
            throw ParseError(which.span, fmt::format("unknown axis '{}'", which.text));
        }
        if (at_keyword("through")) {
            next();
            Through th;
            th.p = name("a point name");
            th.q = name("a point name");
            return th;
        }
        if (at_keyword("angle")) {
            next();
            AngleThrough a;
            a.theta = number();
            keyword("through");
            a.p = name("a point name");
            return a;
        }
        if (at_keyword("parallel")) {
            next();
            ParallelAt p;
            p.line = name("a line name");
            keyword("at");
            p.d = number();
            return p;
        }
        fail(t, "axis, through, angle or parallel");
    }

    void arrow() { expect(Tok::Arrow, "'->'"); }

    Fold fold_body(Name target) {
        Fold f;
        f.name = std::move(target);
        const Token& ax = expect(Tok::Ident, "an axiom o1..o7");
        static const std::pair<const char*, Axiom> table[] = {
            {"o1", Axiom::O1}, {"o2", Axiom::O2}, {"o3", Axiom::O3}, {"o4", Axiom::O4},
            {"o5", Axiom::O5}, {"o6", Axiom::O6}, {"o7", Axiom::O7}};
        bool found = false;
        for (const auto& [k, v] : table) {
            if (ax.text == k) {
                f.axiom = v;
                found = true;
            }
        }
        if (!found) throw ParseError(ax.span, fmt::format("unknown axiom '{}' (expected o1..o7)", ax.text));
        auto& a = f.args;
        switch (f.axiom) {
            case Axiom::O1:
                a.push_back(name("a point name"));
                a.push_back(name("a point name"));
                break;
            case Axiom::O2:
                a.push_back(name("a point name"));
                arrow();
                a.push_back(name("a point name"));
                break;
            case Axiom::O3:
                a.push_back(name("a line name"));
                a.push_back(name("a line name"));
                break;
            case Axiom::O4:
                a.push_back(name("a line name"));
                keyword("through");
                a.push_back(name("a point name"));
                break;
            case Axiom::O5:
                a.push_back(name("a point name"));
                arrow();
                a.push_back(name("a line name"));
                keyword("through");
                a.push_back(name("a point name"));
                break;
            case Axiom::O6: {
                a.push_back(name("a point name"));
                const Token& first_arrow = peek();
                arrow();
                a.push_back(name("a line name"));
                if (peek().kind != Tok::Comma) {
                    throw ParseError(first_arrow.span,
                                     "o6 needs a second constraint ', Q -> L2' after this one");
                }
                next();
                a.push_back(name("a point name"));
                arrow();
                a.push_back(name("a line name"));
                break;
            }
            case Axiom::O7:
                a.push_back(name("a point name"));
                arrow();
                a.push_back(name("a line name"));
                keyword("perp");
                a.push_back(name("a line name"));
                break;
        }
        if (at_keyword("choose")) {
            next();
            const Token& k = expect(Tok::Number, "a solution index after choose");
            int idx = 0;
            const auto [ptr, ec] = std::from_chars(k.text.data(), k.text.data() + k.text.size(), idx);
            if (ec != std::errc() || ptr != k.text.data() + k.text.size() || idx < 1) {
                throw ParseError(k.span, fmt::format("choose needs a positive integer, found '{}'", k.text));
            }
            f.choose = idx;
        }
        return f;
    }

    Statement statement() {
        const Token& kw = peek();
        Statement st;
        st.span = kw.span;
        if (kw.kind != Tok::Ident) fail(kw, "a statement keyword");
        const std::string word = kw.text;
        next();
        if (word == "point") {
            DefPoint p;
            p.name = name("a point name");
            expect(Tok::Equals, "'='");
            expect(Tok::LParen, "'('");
            p.x = number();
            expect(Tok::Comma, "','");
            p.y = number();
            expect(Tok::RParen, "')'");
            st.body = p;
        } else if (word == "line") {
            DefLine l;
            l.name = name("a line name");
            expect(Tok::Equals, "'='");
            l.spec = line_spec();
            st.body = l;
        } else if (word == "fold") {
            Name n = name("a crease name");
            expect(Tok::Equals, "'='");
            st.body = fold_body(std::move(n));
        } else if (word == "reflect") {
            Reflect r;
            r.name = name("a point name");
            expect(Tok::Equals, "'='");
            r.point = name("a point name");
            keyword("over");
            r.crease = name("a line or crease name");
            st.body = r;
        } else if (word == "intersect") {
            Intersect i;
            i.name = name("a point name");
            expect(Tok::Equals, "'='");
            i.l1 = name("a line name");
            i.l2 = name("a line name");
            st.body = i;
        } else if (word == "assert_near") {
            AssertNear a;
            a.lhs = expr();
            a.rhs = expr();
            a.tol = number();
            st.body = a;
        } else if (word == "emit") {
            Emit e;
            e.names.push_back(name("a name to emit"));
            while (peek().kind == Tok::Ident) e.names.push_back(name("a name to emit"));
            st.body = e;
        } else {
            throw ParseError(kw.span, fmt::format("unknown statement '{}'", word));
        }
        return st;
    }

    const std::vector<Token>& toks_;
    size_t pos_ = 0;
};

}  // namespace

ScriptAst parse(const std::vector<Token>& tokens) {
    if (tokens.empty() || tokens.back().kind != Tok::End) {
        throw ParseError({1, 1}, "token stream must end with an end marker");
    }
    return Parser(tokens).script();
}

ScriptAst parse(std::string_view text) { return parse(tokenize(text)); }

}  // namespace origami::fold
