#include "amcm/typecheck.hpp"

#include <utility>

namespace amcm {

namespace types {
TypeExpr int_t() { return {IntT{}}; }
TypeExpr bool_t() { return {BoolT{}}; }
TypeExpr str_t() { return {StrT{}}; }
TypeExpr product(std::vector<TypeExpr> components) { return {Product{std::move(components)}}; }
TypeExpr sequence(TypeExpr element) { return {SequenceT{std::move(element)}}; }
TypeExpr sum(std::vector<TypeExpr> alternatives) { return {Sum{std::move(alternatives)}}; }
TypeExpr function(TypeExpr dom, TypeExpr cod) { return {FunctionT{std::move(dom), std::move(cod)}}; }

ContentValue atom(Value v) { return {Atom{std::move(v)}}; }
ContentValue tuple(std::vector<ContentValue> items) { return {Tuple{std::move(items)}}; }
ContentValue list(std::vector<ContentValue> items) { return {List{std::move(items)}}; }
ContentValue inj(std::size_t index, ContentValue payload) { return {Inj{index, std::move(payload)}}; }
} // namespace types

bool is_num(const Value& v) { return v.is_int(); }
bool is_bool(const Value& v) { return v.is_bool(); }
bool is_str(const Value& v) { return v.is_str(); }

namespace {

std::string child(const std::string& path, std::size_t i) {
    return (path == "/" ? "/" : path + "/") + std::to_string(i);
}

using Predicate = bool (*)(const Value&);

CheckResult check_atomic(Predicate pred, const char* name, const ContentValue& cv, const std::string& path) {
    const auto* a = std::get_if<Atom>(&cv.node);
    if (a && pred(a->value)) return Accept{};
    return Reject{std::string("expected ") + name, path};
}

// Checks items[i] against type_of(i) in order, stopping at the first Reject.
template <class TypeOf>
CheckResult check_all(const std::vector<ContentValue>& items, TypeOf type_of, const std::string& path);

CheckResult check_at(const TypeExpr& t, const ContentValue& cv, const std::string& path) {
    struct Visitor {
        const ContentValue& cv;
        const std::string& path;

        CheckResult operator()(const IntT&) const { return check_atomic(is_num, "Int", cv, path); }
        CheckResult operator()(const BoolT&) const { return check_atomic(is_bool, "Bool", cv, path); }
        CheckResult operator()(const StrT&) const { return check_atomic(is_str, "Str", cv, path); }
        CheckResult operator()(const Product& p) const {
            const auto* tup = std::get_if<Tuple>(&cv.node);
            if (!tup) return Reject{"expected tuple", path};
            if (tup->items.size() != p.components.size()) {
                return Reject{"expected tuple of " + std::to_string(p.components.size()) + " components, got " +
                                  std::to_string(tup->items.size()),
                              path};
            }
            return check_all(tup->items, [&](std::size_t i) -> const TypeExpr& { return p.components[i]; }, path);
        }
        CheckResult operator()(const SequenceT& s) const {
            const auto* lst = std::get_if<List>(&cv.node);
            if (!lst) return Reject{"expected list", path};
            return check_all(lst->items, [&](std::size_t) -> const TypeExpr& { return *s.element; }, path);
        }
        CheckResult operator()(const Sum& s) const {
            const auto* inj = std::get_if<Inj>(&cv.node);
            if (!inj) return Reject{"expected injection", path};
            if (inj->index < 1 || inj->index > s.alternatives.size()) return Reject{"index out of range", path};
            return check_at(s.alternatives[inj->index - 1], *inj->payload, child(path, inj->index));
        }
        CheckResult operator()(const FunctionT&) const {
            return Reject{"function types uninhabited by content", path};
        }
    };
    return std::visit(Visitor{cv, path}, t.node);
}

template <class TypeOf>
CheckResult check_all(const std::vector<ContentValue>& items, TypeOf type_of, const std::string& path) {
    for (std::size_t i = 0; i < items.size(); ++i) {
        CheckResult r = check_at(type_of(i), items[i], child(path, i + 1));
        if (!accepted(r)) return r;
    }
    return Accept{};
}

class TypeParser {
public:
    explicit TypeParser(std::string_view src) : src_(src) {}

    TypeExpr parse() {
        TypeExpr t = type();
        skip_space();
        if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "' after type");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) const {
        throw ParseError(1, static_cast<int>(pos_) + 1, msg, std::move(expected));
    }

    void skip_space() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= src_.size() || src_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::vector<TypeExpr> args() {
        expect('<');
        std::vector<TypeExpr> out{type()};
        skip_space();
        while (pos_ < src_.size() && src_[pos_] == ',') {
            ++pos_;
            out.push_back(type());
            skip_space();
        }
        expect('>');
        return out;
    }

    TypeExpr type() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] >= 'a' && src_[pos_] <= 'z') ++pos_;
        const std::string_view word = src_.substr(start, pos_ - start);
        if (word == "int") return types::int_t();
        if (word == "bool") return types::bool_t();
        if (word == "str") return types::str_t();
        if (word == "prod") return types::product(args());
        if (word == "sum") return types::sum(args());
        if (word == "seq" || word == "fn") {
            const std::size_t at = pos_;
            auto a = args();
            const std::size_t want = word == "seq" ? 1 : 2;
            if (a.size() != want) {
                pos_ = at;
                fail(std::string(word) + " takes " + std::to_string(want) + " type argument" + (want == 1 ? "" : "s"));
            }
            return word == "seq" ? types::sequence(std::move(a[0])) : types::function(std::move(a[0]), std::move(a[1]));
        }
        pos_ = start;
        fail(word.empty() ? "expected type" : "unknown type '" + std::string(word) + "'",
             {"int", "bool", "str", "prod", "seq", "sum", "fn"});
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

std::string join(const std::vector<TypeExpr>& ts) {
    std::string s;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i > 0) s += ",";
        s += format_type(ts[i]);
    }
    return s;
}

} // namespace

CheckResult check(const TypeExpr& t, const ContentValue& cv) { return check_at(t, cv, "/"); }

TypeExpr parse_type(std::string_view source) { return TypeParser(source).parse(); }

std::string format_type(const TypeExpr& t) {
    struct Visitor {
        std::string operator()(const IntT&) const { return "int"; }
        std::string operator()(const BoolT&) const { return "bool"; }
        std::string operator()(const StrT&) const { return "str"; }
        std::string operator()(const Product& p) const { return "prod<" + join(p.components) + ">"; }
        std::string operator()(const SequenceT& s) const { return "seq<" + format_type(*s.element) + ">"; }
        std::string operator()(const Sum& s) const { return "sum<" + join(s.alternatives) + ">"; }
        std::string operator()(const FunctionT& f) const {
            return "fn<" + format_type(*f.dom) + "," + format_type(*f.cod) + ">";
        }
    };
    return std::visit(Visitor{}, t.node);
}

} // namespace amcm
