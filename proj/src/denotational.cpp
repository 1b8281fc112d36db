#include "amcm/denotational.hpp"

#include <stdexcept>

namespace amcm {

namespace {

Value literal_value(const Exp& e) {
    struct Visitor {
        Value operator()(const TrueLit&) const { return Value::boolean(true); }
        Value operator()(const FalseLit&) const { return Value::boolean(false); }
        Value operator()(const IntLit& i) const { return Value::integer(i.value); }
        Value operator()(const StrLit& s) const { return Value::string(s.value); }
        Value operator()(const Var&) const { throw std::logic_error("not a literal"); }
    };
    return std::visit(Visitor{}, e.node);
}

} // namespace

EvalOutcome eval_exp(const Exp& e, const State& s) {
    if (const auto* v = std::get_if<Var>(&e.node)) {
        Binding b = lookup(s.memory, v->id);
        if (!b) return Err{UnboundIdentifier{v->id}};
        return EvalOk{std::move(*b), s};
    }
    return EvalOk{literal_value(e), s};
}

ExecOutcome exec_com(const Com& c, const State& s) {
    struct Visitor {
        const State& s;

        ExecOutcome operator()(const Assign& a) const {
            return star(eval_exp(a.rhs, s), [&](const Value& v, const State& s1) -> ExecOutcome {
                return Done{bind_value(s1, a.id, v)};
            });
        }
        ExecOutcome operator()(const If& i) const {
            return star(eval_exp(i.cond, s), [&](const Value& v, const State& s1) -> ExecOutcome {
                if (!v.is_bool()) {
                    return Err{TypeMismatch{"Bool", std::string(v.tag_name()), "if-condition"}};
                }
                return exec_com(v.as_bool() ? *i.then_branch : *i.else_branch, s1);
            });
        }
        ExecOutcome operator()(const Seq& q) const {
            ExecOutcome first = exec_com(*q.first, s);
            if (const auto* d = std::get_if<Done>(&first)) return exec_com(*q.second, d->state);
            return first;
        }
        ExecOutcome operator()(const Read& r) const {
            if (s.input.empty()) return Err{InputExhausted{}};
            State next = bind_value(s, r.id, s.input.front());
            next.input.erase(next.input.begin());
            return Done{std::move(next)};
        }
        ExecOutcome operator()(const Write& w) const {
            return star(eval_exp(w.rhs, s), [](const Value& v, const State& s1) -> ExecOutcome {
                State next = s1;
                next.output.push_back(v);
                return Done{std::move(next)};
            });
        }
    };
    return std::visit(Visitor{s}, c.node);
}

std::string describe(const ExecOutcome& o) {
    if (const auto* d = std::get_if<Done>(&o)) return "Done(" + format_state(d->state) + ")";
    return "Err(" + describe(std::get<Err>(o).error) + ")";
}

} // namespace amcm
