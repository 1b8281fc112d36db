#pragma once

// Random and exhaustive generators shared by the unit and acceptance tests.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "amcm/syntax.hpp"
#include "amcm/templating.hpp"
#include "amcm/typecheck.hpp"

namespace amcm::gen {

using Rng = std::mt19937_64;

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
    return xs[below(rng, xs.size())];
}

inline std::string word(Rng& rng, std::size_t max_len = 6) {
    static const std::string alphabet = "abcdefghijklmnopqrstuvwxyz ABC.,!-0123456789";
    std::string s;
    const std::size_t n = below(rng, max_len + 1);
    for (std::size_t i = 0; i < n; ++i) s += alphabet[below(rng, alphabet.size())];
    return s;
}

inline Value random_value(Rng& rng) {
    switch (below(rng, 3)) {
    case 0: return Value::integer(std::uniform_int_distribution<std::int64_t>(-1000, 1000)(rng));
    case 1: return Value::boolean(coin(rng));
    default: return Value::string(word(rng));
    }
}

// Values whose tag differs from `v`.
inline Value other_tag(Rng& rng, const Value& v) {
    for (;;) {
        Value w = random_value(rng);
        if (w.tag_name() != v.tag_name()) return w;
    }
}

inline const std::vector<std::string>& default_idents() {
    static const std::vector<std::string> ids{"x", "y"};
    return ids;
}

inline Exp random_exp(Rng& rng, Dialect dialect, const std::vector<std::string>& ids = default_idents()) {
    if (dialect == Dialect::strict) {
        switch (below(rng, 5)) {
        case 0: return ast::t();
        case 1: return ast::f();
        case 2: return ast::num(0);
        case 3: return ast::num(1);
        default: return ast::var(pick(rng, ids));
        }
    }
    switch (below(rng, 6)) {
    case 0: return ast::t();
    case 1: return ast::f();
    case 2: return ast::num(std::uniform_int_distribution<std::int64_t>(-50, 50)(rng));
    case 3: return ast::str(word(rng));
    default: return ast::var(pick(rng, ids));
    }
}

inline Com random_com(Rng& rng, int max_depth, Dialect dialect, const std::vector<std::string>& ids = default_idents(),
                      double branch_p = 0.55) {
    if (max_depth > 1 && coin(rng, branch_p)) {
        if (coin(rng)) {
            // Conditions are mostly Bool so that both arms get exercised.
            Exp cond = coin(rng, 0.7) ? (coin(rng) ? ast::t() : ast::f()) : random_exp(rng, dialect, ids);
            return ast::if_(std::move(cond), random_com(rng, max_depth - 1, dialect, ids, branch_p),
                            random_com(rng, max_depth - 1, dialect, ids, branch_p));
        }
        return ast::seq(random_com(rng, max_depth - 1, dialect, ids, branch_p),
                        random_com(rng, max_depth - 1, dialect, ids, branch_p));
    }
    if (dialect == Dialect::extended) {
        switch (below(rng, 5)) {
        case 0: return ast::read(pick(rng, ids));
        case 1: return ast::write(random_exp(rng, dialect, ids));
        default: break;
        }
    }
    return ast::assign(pick(rng, ids), random_exp(rng, dialect, ids));
}

inline State random_state(Rng& rng, const std::vector<std::string>& ids = default_idents(), std::size_t max_input = 4) {
    State s;
    for (const auto& id : ids) {
        if (coin(rng)) s.memory = s.memory.bind(Ident(id), random_value(rng));
    }
    const std::size_t n = below(rng, max_input + 1);
    for (std::size_t i = 0; i < n; ++i) s.input.push_back(random_value(rng));
    return s;
}

// ---- exhaustive command enumeration -------------------------------------

inline std::vector<Exp> small_exps() {
    return {ast::num(0), ast::num(1), ast::t(), ast::f(), ast::var("x"), ast::var("y")};
}

// All Assign/If/Seq commands of depth <= 2 over {x,y} and small_exps().
inline std::vector<Com> coms_up_to_depth2() {
    const auto exps = small_exps();
    std::vector<Com> leaves;
    for (const char* id : {"x", "y"}) {
        for (const auto& e : exps) leaves.push_back(ast::assign(id, e));
    }
    std::vector<Com> out = leaves;
    for (const auto& e : exps) {
        for (const auto& a : leaves) {
            for (const auto& b : leaves) out.push_back(ast::if_(e, a, b));
        }
    }
    for (const auto& a : leaves) {
        for (const auto& b : leaves) out.push_back(ast::seq(a, b));
    }
    return out;
}

// Calls `visit` on every command of depth <= 3 (each exactly once).
inline std::size_t for_each_com_up_to_depth3(const std::function<void(const Com&)>& visit) {
    const auto exps = small_exps();
    const auto lower = coms_up_to_depth2();
    std::size_t n = 0;
    for (const auto& c : lower) {
        if (depth(c) == 1) {
            visit(c);
            ++n;
        }
    }
    for (const auto& a : lower) {
        for (const auto& b : lower) {
            for (const auto& e : exps) {
                visit(ast::if_(e, a, b));
                ++n;
            }
            visit(ast::seq(a, b));
            ++n;
        }
    }
    return n;
}

inline std::vector<State> fixed_initial_states() {
    State empty;
    State x_int;
    x_int.memory = MemoryMap{{"x", Value::integer(1)}};
    State x_bool;
    x_bool.memory = MemoryMap{{"x", Value::boolean(true)}};
    State both;
    both.memory = MemoryMap{{"x", Value::integer(1)}, {"y", Value::integer(0)}};
    return {empty, x_int, x_bool, both};
}

// ---- types and content ---------------------------------------------------

inline std::vector<Value> atomic_seeds() {
    return {Value::integer(0), Value::boolean(true), Value::string("a")};
}

// All type expressions with depth <= `depth` and constructor arity <= 2.
inline std::vector<TypeExpr> types_up_to(int depth) {
    std::vector<TypeExpr> level{types::int_t(), types::bool_t(), types::str_t()};
    for (int d = 2; d <= depth; ++d) {
        std::vector<TypeExpr> next{types::int_t(), types::bool_t(), types::str_t()};
        for (const auto& a : level) next.push_back(types::product({a}));
        for (const auto& a : level)
            for (const auto& b : level) next.push_back(types::product({a, b}));
        for (const auto& a : level) next.push_back(types::sequence(a));
        for (const auto& a : level) next.push_back(types::sum({a}));
        for (const auto& a : level)
            for (const auto& b : level) next.push_back(types::sum({a, b}));
        for (const auto& a : level)
            for (const auto& b : level) next.push_back(types::function(a, b));
        level = std::move(next);
    }
    return level;
}

// All content values with depth <= `depth`, arity <= 2, injection indices 1..3.
inline std::vector<ContentValue> contents_up_to(int depth) {
    std::vector<ContentValue> atoms;
    for (const auto& v : atomic_seeds()) atoms.push_back(types::atom(v));
    std::vector<ContentValue> level = atoms;
    for (int d = 2; d <= depth; ++d) {
        std::vector<ContentValue> next = atoms;
        for (const auto& a : level) next.push_back(types::tuple({a}));
        for (const auto& a : level)
            for (const auto& b : level) next.push_back(types::tuple({a, b}));
        next.push_back(types::list({}));
        for (const auto& a : level) next.push_back(types::list({a}));
        for (const auto& a : level)
            for (const auto& b : level) next.push_back(types::list({a, b}));
        for (std::size_t k = 1; k <= 3; ++k)
            for (const auto& a : level) next.push_back(types::inj(k, a));
        level = std::move(next);
    }
    return level;
}

// Random content-bearing type (no function types).
inline TypeExpr random_type(Rng& rng, int max_depth) {
    if (max_depth <= 1 || coin(rng, 0.4)) {
        switch (below(rng, 3)) {
        case 0: return types::int_t();
        case 1: return types::bool_t();
        default: return types::str_t();
        }
    }
    auto several = [&] {
        std::vector<TypeExpr> ts;
        const std::size_t n = 1 + below(rng, 3);
        for (std::size_t i = 0; i < n; ++i) ts.push_back(random_type(rng, max_depth - 1));
        return ts;
    };
    switch (below(rng, 3)) {
    case 0: return types::product(several());
    case 1: return types::sequence(random_type(rng, max_depth - 1));
    default: return types::sum(several());
    }
}

inline Value random_value_of(Rng& rng, const TypeExpr& t) {
    for (;;) {
        Value v = random_value(rng);
        if ((std::holds_alternative<IntT>(t.node) && v.is_int()) ||
            (std::holds_alternative<BoolT>(t.node) && v.is_bool()) ||
            (std::holds_alternative<StrT>(t.node) && v.is_str()))
            return v;
    }
}

// A value built to inhabit `t` (which must be free of function types).
inline ContentValue inhabitant(Rng& rng, const TypeExpr& t) {
    if (t.atomic()) return types::atom(random_value_of(rng, t));
    if (const auto* p = std::get_if<Product>(&t.node)) {
        std::vector<ContentValue> items;
        for (const auto& c : p->components) items.push_back(inhabitant(rng, c));
        return types::tuple(std::move(items));
    }
    if (const auto* s = std::get_if<SequenceT>(&t.node)) {
        std::vector<ContentValue> items;
        const std::size_t n = below(rng, 4);
        for (std::size_t i = 0; i < n; ++i) items.push_back(inhabitant(rng, *s->element));
        return types::list(std::move(items));
    }
    const auto& sum = std::get<Sum>(t.node);
    const std::size_t k = below(rng, sum.alternatives.size());
    return types::inj(k + 1, inhabitant(rng, sum.alternatives[k]));
}

inline std::size_t count_atoms(const ContentValue& cv) {
    if (std::holds_alternative<Atom>(cv.node)) return 1;
    if (const auto* t = std::get_if<Tuple>(&cv.node)) {
        std::size_t n = 0;
        for (const auto& c : t->items) n += count_atoms(c);
        return n;
    }
    if (const auto* l = std::get_if<List>(&cv.node)) {
        std::size_t n = 0;
        for (const auto& c : l->items) n += count_atoms(c);
        return n;
    }
    return count_atoms(*std::get<Inj>(cv.node).payload);
}

// Replaces atom number `target` (preorder) by a value of a different tag.
inline ContentValue mutate_atom(Rng& rng, const ContentValue& cv, std::size_t& target) {
    if (const auto* a = std::get_if<Atom>(&cv.node)) {
        if (target-- == 0) return types::atom(other_tag(rng, a->value));
        return cv;
    }
    auto each = [&](const std::vector<ContentValue>& xs) {
        std::vector<ContentValue> out;
        for (const auto& c : xs) out.push_back(mutate_atom(rng, c, target));
        return out;
    };
    if (const auto* t = std::get_if<Tuple>(&cv.node)) return types::tuple(each(t->items));
    if (const auto* l = std::get_if<List>(&cv.node)) return types::list(each(l->items));
    const auto& inj = std::get<Inj>(cv.node);
    return types::inj(inj.index, mutate_atom(rng, *inj.payload, target));
}

inline std::string content_literal(const ContentValue& cv) {
    if (const auto* a = std::get_if<Atom>(&cv.node)) return format_value(a->value);
    auto join = [](const std::vector<ContentValue>& xs, const char* sep) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) s += sep;
            s += content_literal(xs[i]);
        }
        return s;
    };
    if (const auto* t = std::get_if<Tuple>(&cv.node)) return "(" + join(t->items, ", ") + ")";
    if (const auto* l = std::get_if<List>(&cv.node)) return "[" + join(l->items, "; ") + "]";
    const auto& inj = std::get<Inj>(cv.node);
    return "inj " + std::to_string(inj.index) + " " + content_literal(*inj.payload);
}

inline std::string content_line(const std::string& name, const ContentValue& cv) {
    return name + " = " + content_literal(cv);
}

} // namespace amcm::gen
