#include "amcm/syntax.hpp"

#include <algorithm>
#include <charconv>
#include <utility>
#include <vector>

namespace amcm {

namespace ast {
Exp t() { return Exp{TrueLit{}}; }
Exp f() { return Exp{FalseLit{}}; }
Exp num(std::int64_t v) { return Exp{IntLit{v}}; }
Exp str(std::string v) { return Exp{StrLit{std::move(v)}}; }
Exp var(std::string name) { return Exp{Var{Ident(std::move(name))}}; }
Com assign(std::string name, Exp rhs) { return Com{Assign{Ident(std::move(name)), std::move(rhs)}}; }
Com if_(Exp cond, Com then_branch, Com else_branch) {
    return Com{If{std::move(cond), std::move(then_branch), std::move(else_branch)}};
}
Com seq(Com first, Com second) { return Com{Seq{std::move(first), std::move(second)}}; }
Com read(std::string name) { return Com{Read{Ident(std::move(name))}}; }
Com write(Exp rhs) { return Com{Write{std::move(rhs)}}; }
} // namespace ast

namespace {

enum class Tok { ident, keyword, integer, string, punct, end };

struct Token {
    Tok kind;
    std::string text; // decoded contents for strings
    int line;
    int column;
};

std::string show(const Token& t) {
    switch (t.kind) {
    case Tok::end: return "end of input";
    case Tok::string: return "string literal";
    default: return "'" + t.text + "'";
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space_and_comments();
            const int line = line_;
            const int col = col_;
            if (at_end()) {
                out.push_back({Tok::end, "", line, col});
                return out;
            }
            const char c = peek();
            if (is_alpha(c)) {
                std::string word;
                while (!at_end() && (is_alpha(peek()) || is_digit(peek()))) word += advance();
                out.push_back({is_reserved_word(word) ? Tok::keyword : Tok::ident, word, line, col});
            } else if (is_digit(c) || (c == '-' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
                std::string num(1, advance());
                while (!at_end() && is_digit(peek())) num += advance();
                out.push_back({Tok::integer, num, line, col});
            } else if (c == '"') {
                out.push_back({Tok::string, lex_string(), line, col});
            } else if (c == '=' || c == '(' || c == ')' || c == ';') {
                out.push_back({Tok::punct, std::string(1, advance()), line, col});
            } else {
                throw ParseError(line, col, std::string("unexpected character '") + c + "'");
            }
        }
    }

private:
    static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }
    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (!at_end()) {
            const char c = peek();
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                return;
            }
        }
    }

    std::string lex_string() {
        const int line = line_;
        const int col = col_;
        advance();
        std::string value;
        for (;;) {
            if (at_end() || peek() == '\n') throw ParseError(line, col, "unterminated string literal");
            const char c = advance();
            if (c == '"') return value;
            if (c != '\\') {
                value += c;
                continue;
            }
            if (at_end()) throw ParseError(line, col, "unterminated string literal");
            const int esc_line = line_;
            const int esc_col = col_ - 1;
            switch (advance()) {
            case '"': value += '"'; break;
            case '\\': value += '\\'; break;
            case 'n': value += '\n'; break;
            case 't': value += '\t'; break;
            case 'r': value += '\r'; break;
            default: throw ParseError(esc_line, esc_col, "unknown escape sequence");
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::string_view src, Dialect dialect) : toks_(Lexer(src).run()), strict_(dialect == Dialect::strict) {}

    bool at_end() const { return cur().kind == Tok::end; }

    void expect_end() {
        if (!at_end()) fail("unexpected " + show(cur()), {"end of input"});
    }

    Exp exp() {
        const Token& t = cur();
        switch (t.kind) {
        case Tok::keyword:
            if (t.text == "true") {
                ++pos_;
                return ast::t();
            }
            if (t.text == "false") {
                ++pos_;
                return ast::f();
            }
            break;
        case Tok::ident:
            ++pos_;
            return Exp{Var{Ident(t.text)}};
        case Tok::integer: {
            if (strict_ && t.text != "0" && t.text != "1") {
                throw StrictModeError(t.line, t.column,
                                      "integer literal " + t.text + " outside the strict grammar",
                                      {"0", "1"});
            }
            std::int64_t v = 0;
            const char* first = t.text.data();
            const char* last = first + t.text.size();
            auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc{} || ptr != last) {
                throw ParseError(t.line, t.column, "integer literal out of range");
            }
            ++pos_;
            return Exp{IntLit{v}};
        }
        case Tok::string:
            if (strict_) {
                throw StrictModeError(t.line, t.column, "string literal outside the strict grammar");
            }
            ++pos_;
            return Exp{StrLit{t.text}};
        default: break;
        }
        fail("expected expression, got " + show(t), exp_starts());
    }

    Com seq() {
        Com first = simple();
        if (is_punct(";")) {
            ++pos_;
            return ast::seq(std::move(first), seq());
        }
        return first;
    }

private:
    [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) const {
        throw ParseError(cur().line, cur().column, msg, std::move(expected));
    }

    std::vector<std::string> exp_starts() const {
        if (strict_) return {"true", "false", "0", "1", "identifier"};
        return {"true", "false", "integer", "string", "identifier"};
    }

    std::vector<std::string> com_starts() const {
        if (strict_) return {"identifier", "'if'", "'('"};
        return {"identifier", "'if'", "'read'", "'write'", "'('"};
    }

    const Token& cur() const { return toks_[pos_]; }

    bool is_punct(std::string_view p) const { return cur().kind == Tok::punct && cur().text == p; }
    bool is_keyword(std::string_view k) const { return cur().kind == Tok::keyword && cur().text == k; }

    void expect_punct(std::string_view p) {
        if (!is_punct(p)) fail("expected '" + std::string(p) + "', got " + show(cur()), {"'" + std::string(p) + "'"});
        ++pos_;
    }

    Ident ident() {
        if (cur().kind != Tok::ident) fail("expected identifier, got " + show(cur()), {"identifier"});
        return Ident(toks_[pos_++].text);
    }

    void extension(const char* what) {
        if (strict_) {
            throw StrictModeError(cur().line, cur().column,
                                  std::string(what) + " command outside the strict grammar");
        }
    }

    Com simple() {
        const Token& t = cur();
        if (t.kind == Tok::ident) {
            Ident id = ident();
            expect_punct("=");
            return Com{Assign{std::move(id), exp()}};
        }
        if (is_keyword("if")) {
            ++pos_;
            expect_punct("(");
            Exp cond = exp();
            expect_punct(")");
            Com then_branch = seq();
            if (!is_keyword("else")) fail("expected 'else', got " + show(cur()), {"'else'", "';'"});
            ++pos_;
            Com else_branch = simple();
            return ast::if_(std::move(cond), std::move(then_branch), std::move(else_branch));
        }
        if (is_keyword("read")) {
            extension("read");
            ++pos_;
            expect_punct("(");
            Ident id = ident();
            expect_punct(")");
            return Com{Read{std::move(id)}};
        }
        if (is_keyword("write")) {
            extension("write");
            ++pos_;
            expect_punct("(");
            Exp e = exp();
            expect_punct(")");
            return Com{Write{std::move(e)}};
        }
        if (is_punct("(")) {
            ++pos_;
            Com inner = seq();
            expect_punct(")");
            return inner;
        }
        fail("expected command, got " + show(t), com_starts());
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    bool strict_;
};

std::string arm(const Com& c) {
    if (std::holds_alternative<Seq>(c.node)) return "(" + pretty_print(c) + ")";
    return pretty_print(c);
}

} // namespace

Exp parse_exp(std::string_view source, Dialect dialect) {
    Parser p(source, dialect);
    Exp e = p.exp();
    p.expect_end();
    return e;
}

Com parse_com(std::string_view source, Dialect dialect) {
    Parser p(source, dialect);
    Com c = p.seq();
    p.expect_end();
    return c;
}

std::optional<Com> parse_program(std::string_view source, Dialect dialect) {
    Parser p(source, dialect);
    if (p.at_end()) return std::nullopt;
    Com c = p.seq();
    p.expect_end();
    return c;
}

std::string pretty_print(const Exp& e) {
    struct Visitor {
        std::string operator()(const TrueLit&) const { return "true"; }
        std::string operator()(const FalseLit&) const { return "false"; }
        std::string operator()(const IntLit& i) const { return std::to_string(i.value); }
        std::string operator()(const StrLit& s) const { return quote_string(s.value); }
        std::string operator()(const Var& v) const { return v.id.name(); }
    };
    return std::visit(Visitor{}, e.node);
}

std::string pretty_print(const Com& c) {
    struct Visitor {
        std::string operator()(const Assign& a) const { return a.id.name() + " = " + pretty_print(a.rhs); }
        std::string operator()(const If& i) const {
            return "if (" + pretty_print(i.cond) + ") " + arm(*i.then_branch) + " else " + arm(*i.else_branch);
        }
        std::string operator()(const Seq& s) const {
            // `;` nests to the right, so only a left-nested Seq needs grouping.
            return arm(*s.first) + "; " + pretty_print(*s.second);
        }
        std::string operator()(const Read& r) const { return "read(" + r.id.name() + ")"; }
        std::string operator()(const Write& w) const { return "write(" + pretty_print(w.rhs) + ")"; }
    };
    return std::visit(Visitor{}, c.node);
}

int depth(const Com& c) {
    if (const auto* i = std::get_if<If>(&c.node)) {
        return 1 + std::max(depth(*i->then_branch), depth(*i->else_branch));
    }
    if (const auto* s = std::get_if<Seq>(&c.node)) {
        return 1 + std::max(depth(*s->first), depth(*s->second));
    }
    return 1;
}

} // namespace amcm
