#include <cctype>
#include <fmt/format.h>

#include "origami/foldscript.hpp"

namespace origami::fold {

std::string to_string(const SourceSpan& s) { return fmt::format("{}:{}", s.line, s.column); }

ParseError::ParseError(SourceSpan span, const std::string& msg)
    : Error(fmt::format("{}: parse error: {}", to_string(span), msg)), span_(span), msg_(msg) {}

EvalError::EvalError(SourceSpan span, const std::string& msg)
    : Error(fmt::format("{}: {}", to_string(span), msg)), span_(span), msg_(msg) {}

AssertionFailure::AssertionFailure(SourceSpan span, const std::string& msg, double lhs, double rhs)
    : EvalError(span, msg), lhs_(lhs), rhs_(rhs) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
public:
    explicit Lexer(std::string_view text) : src_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            const SourceSpan at = here();
            if (c == '\n') {
                out.push_back({Tok::Newline, "\n", at});
                advance();
            } else if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            } else if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (ident_start(c)) {
                const size_t start = pos_;
                while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
                out.push_back({Tok::Ident, std::string(src_.substr(start, pos_ - start)), at});
            } else if (digit(c) || (c == '.' && pos_ + 1 < src_.size() && digit(src_[pos_ + 1]))) {
                out.push_back({Tok::Number, number(), at});
            } else if (c == '-' && peek(1) == '>') {
                advance();
                advance();
                out.push_back({Tok::Arrow, "->", at});
            } else {
                Tok kind;
                switch (c) {
                    case '(': kind = Tok::LParen; break;
                    case ')': kind = Tok::RParen; break;
                    case ',': kind = Tok::Comma; break;
                    case '=': kind = Tok::Equals; break;
                    case '.': kind = Tok::Dot; break;
                    case '-': kind = Tok::Minus; break;
                    default:
                        throw ParseError(at, fmt::format("unexpected character '{}'", printable(c)));
                }
                out.push_back({kind, std::string(1, c), at});
                advance();
            }
        }
        out.push_back({Tok::End, "", here()});
        return out;
    }

private:
    static std::string printable(char c) {
        const auto u = static_cast<unsigned char>(c);
        return u >= 0x20 && u < 0x7f ? std::string(1, c) : fmt::format("\\x{:02x}", u);
    }

    char peek(size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

    SourceSpan here() const { return {line_, col_}; }

    void advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
            ++col_;
        }
    }

    std::string number() {
        const size_t start = pos_;
        while (digit(peek(0))) advance();
        if (peek(0) == '.') {
            advance();
            while (digit(peek(0))) advance();
        }
        if ((peek(0) == 'e' || peek(0) == 'E') &&
            (digit(peek(1)) || ((peek(1) == '-' || peek(1) == '+') && digit(peek(2))))) {
            advance();
            if (peek(0) == '-' || peek(0) == '+') advance();
            while (digit(peek(0))) advance();
        }
        return std::string(src_.substr(start, pos_ - start));
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

}  // namespace origami::fold
