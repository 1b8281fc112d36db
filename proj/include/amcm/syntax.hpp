#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "amcm/box.hpp"
#include "amcm/domains.hpp"
#include "amcm/error.hpp"

namespace amcm {

struct TrueLit {
    bool operator==(const TrueLit&) const = default;
};
struct FalseLit {
    bool operator==(const FalseLit&) const = default;
};
struct IntLit {
    std::int64_t value;
    bool operator==(const IntLit&) const = default;
};
struct StrLit {
    std::string value;
    bool operator==(const StrLit&) const = default;
};
struct Var {
    Ident id;
    bool operator==(const Var&) const = default;
};

struct Exp {
    std::variant<TrueLit, FalseLit, IntLit, StrLit, Var> node;
    bool operator==(const Exp&) const = default;
};

struct Com;

struct Assign {
    Ident id;
    Exp rhs;
    bool operator==(const Assign&) const = default;
};
struct If {
    Exp cond;
    Box<Com> then_branch;
    Box<Com> else_branch;
    bool operator==(const If&) const = default;
};
struct Seq {
    Box<Com> first;
    Box<Com> second;
    bool operator==(const Seq&) const = default;
};
struct Read {
    Ident id;
    bool operator==(const Read&) const = default;
};
struct Write {
    Exp rhs;
    bool operator==(const Write&) const = default;
};

struct Com {
    std::variant<Assign, If, Seq, Read, Write> node;
    bool operator==(const Com&) const = default;
};

// Shorthand constructors, mostly for tests and the templating compiler.
namespace ast {
Exp t();
Exp f();
Exp num(std::int64_t v);
Exp str(std::string v);
Exp var(std::string name);
Com assign(std::string name, Exp rhs);
Com if_(Exp cond, Com then_branch, Com else_branch);
Com seq(Com first, Com second);
Com read(std::string name);
Com write(Exp rhs);
} // namespace ast

// `strict` accepts exactly the illustrative grammar: literals 0, 1, true,
// false, identifiers; assignment, if/else and `;`. `extended` adds full
// integer and string literals and the read(I) / write(E) commands.
enum class Dialect { extended, strict };

Exp parse_exp(std::string_view source, Dialect dialect = Dialect::extended);
Com parse_com(std::string_view source, Dialect dialect = Dialect::extended);

// Like parse_com, but a source holding only whitespace and comments is the
// empty program (std::nullopt).
std::optional<Com> parse_program(std::string_view source, Dialect dialect = Dialect::extended);

std::string pretty_print(const Exp& e);
std::string pretty_print(const Com& c);

// Longest root-to-leaf path counted in command nodes; Assign/Read/Write are 1.
int depth(const Com& c);

} // namespace amcm
