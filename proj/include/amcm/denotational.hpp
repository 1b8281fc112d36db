#pragma once

#include <type_traits>
#include <utility>
#include <variant>

#include "amcm/domains.hpp"
#include "amcm/syntax.hpp"

namespace amcm {

struct EvalOk {
    Value value;
    State state;
    bool operator==(const EvalOk&) const = default;
};

struct Err {
    ErrorKind error;
    bool operator==(const Err&) const = default;
};

struct Done {
    State state;
    bool operator==(const Done&) const = default;
};

// [[Value x State] + {error}]
using EvalOutcome = std::variant<EvalOk, Err>;
// [State + {error}]
using ExecOutcome = std::variant<Done, Err>;

EvalOutcome eval_exp(const Exp& e, const State& s);

/// The sequencing combinator `*`: an error on the left is returned as-is and
/// the continuation is never called; otherwise the continuation receives
/// the value and post-state.
template <class K>
    requires std::is_invocable_r_v<ExecOutcome, K, const Value&, const State&>
ExecOutcome star(const EvalOutcome& o, K&& k) {
    if (const auto* err = std::get_if<Err>(&o)) {
        return *err;
    }
    const auto& ok = std::get<EvalOk>(o);
    return std::forward<K>(k)(ok.value, ok.state);
}

ExecOutcome exec_com(const Com& c, const State& s);

std::string describe(const ExecOutcome& o);

} // namespace amcm
