#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "amcm/box.hpp"
#include "amcm/domains.hpp"
#include "amcm/error.hpp"

namespace amcm {

struct TypeExpr;

struct IntT {
    bool operator==(const IntT&) const = default;
};
struct BoolT {
    bool operator==(const BoolT&) const = default;
};
struct StrT {
    bool operator==(const StrT&) const = default;
};
struct Product {
    std::vector<TypeExpr> components;
    bool operator==(const Product&) const = default;
};
struct SequenceT {
    Box<TypeExpr> element;
    bool operator==(const SequenceT&) const = default;
};
struct Sum {
    std::vector<TypeExpr> alternatives;
    bool operator==(const Sum&) const = default;
};
struct FunctionT {
    Box<TypeExpr> dom;
    Box<TypeExpr> cod;
    bool operator==(const FunctionT&) const = default;
};

struct TypeExpr {
    std::variant<IntT, BoolT, StrT, Product, SequenceT, Sum, FunctionT> node;
    bool operator==(const TypeExpr&) const = default;

    bool atomic() const noexcept { return node.index() <= 2; }
};

struct ContentValue;

struct Atom {
    Value value;
    bool operator==(const Atom&) const = default;
};
struct Tuple {
    std::vector<ContentValue> items;
    bool operator==(const Tuple&) const = default;
};
struct List {
    std::vector<ContentValue> items;
    bool operator==(const List&) const = default;
};
// Element of a disjunctive sum: the payload and its 1-based component index.
struct Inj {
    std::size_t index;
    Box<ContentValue> payload;
    bool operator==(const Inj&) const = default;
};

struct ContentValue {
    std::variant<Atom, Tuple, List, Inj> node;
    bool operator==(const ContentValue&) const = default;
};

namespace types {
TypeExpr int_t();
TypeExpr bool_t();
TypeExpr str_t();
TypeExpr product(std::vector<TypeExpr> components);
TypeExpr sequence(TypeExpr element);
TypeExpr sum(std::vector<TypeExpr> alternatives);
TypeExpr function(TypeExpr dom, TypeExpr cod);

ContentValue atom(Value v);
ContentValue tuple(std::vector<ContentValue> items);
ContentValue list(std::vector<ContentValue> items);
ContentValue inj(std::size_t index, ContentValue payload);
} // namespace types

bool is_num(const Value& v);
bool is_bool(const Value& v);
bool is_str(const Value& v);

struct Accept {
    bool operator==(const Accept&) const = default;
};
struct Reject {
    std::string reason;
    std::string path; // "/" for the root, "/i/j" for nested 1-based components
    bool operator==(const Reject&) const = default;
};
using CheckResult = std::variant<Accept, Reject>;

CheckResult check(const TypeExpr& t, const ContentValue& cv);

inline bool accepted(const CheckResult& r) { return std::holds_alternative<Accept>(r); }

// `int`, `bool`, `str`, `prod<t1,...>`, `seq<t>`, `sum<t1,...>`, `fn<t1,t2>`.
TypeExpr parse_type(std::string_view source);
std::string format_type(const TypeExpr& t);

} // namespace amcm
