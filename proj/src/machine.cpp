#include "amcm/machine.hpp"

#include <utility>

namespace amcm {

namespace {

void append(Code& out, Code more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

} // namespace

Code compile_exp(const Exp& e) {
    struct Visitor {
        Instr operator()(const TrueLit&) const { return {PushConst{Value::boolean(true)}}; }
        Instr operator()(const FalseLit&) const { return {PushConst{Value::boolean(false)}}; }
        Instr operator()(const IntLit& i) const { return {PushConst{Value::integer(i.value)}}; }
        Instr operator()(const StrLit& s) const { return {PushConst{Value::string(s.value)}}; }
        Instr operator()(const Var& v) const { return {LoadVar{v.id}}; }
    };
    return Code{std::visit(Visitor{}, e.node)};
}

Code compile_com(const Com& c) {
    struct Visitor {
        Code operator()(const Assign& a) const {
            Code code = compile_exp(a.rhs);
            code.push_back({Store{a.id}});
            return code;
        }
        Code operator()(const If& i) const {
            Code code = compile_exp(i.cond);
            code.push_back({Branch{compile_com(*i.then_branch), compile_com(*i.else_branch)}});
            return code;
        }
        Code operator()(const Seq& s) const {
            Code code = compile_com(*s.first);
            append(code, compile_com(*s.second));
            return code;
        }
        Code operator()(const Read& r) const { return Code{{ReadIn{r.id}}}; }
        Code operator()(const Write& w) const {
            Code code = compile_exp(w.rhs);
            code.push_back({WriteOut{}});
            return code;
        }
    };
    return std::visit(Visitor{}, c.node);
}

std::size_t total_instruction_count(const Code& code) {
    std::size_t n = 0;
    for (const auto& i : code) {
        ++n;
        if (const auto* b = std::get_if<Branch>(&i.op)) {
            n += total_instruction_count(*b->then_code) + total_instruction_count(*b->else_code);
        }
    }
    return n;
}

// RemainingCode keeps the current vector and position inline; spliced-over
// continuations live in `rest_`. Invariant: either code_ is null (empty) or
// pos_ < code_->size(), and no frame on `rest_` is exhausted.

RemainingCode::RemainingCode(std::shared_ptr<const Code> code) : code_(std::move(code)) { normalize(); }

void RemainingCode::normalize() {
    while (code_ && pos_ >= code_->size()) {
        if (!rest_) {
            code_.reset();
            pos_ = 0;
            return;
        }
        code_ = rest_->code;
        pos_ = rest_->pos;
        rest_ = rest_->next;
    }
}

bool RemainingCode::empty() const noexcept { return !code_; }

std::size_t RemainingCode::size() const noexcept {
    if (!code_) return 0;
    std::size_t n = code_->size() - pos_;
    for (const Frame* f = rest_.get(); f; f = f->next.get()) n += f->code->size() - f->pos;
    return n;
}

const Instr& RemainingCode::head() const {
    if (!code_) throw MachineMisuse("head of empty code");
    return (*code_)[pos_];
}

RemainingCode RemainingCode::tail() const {
    RemainingCode r = *this;
    if (r.code_) {
        ++r.pos_;
        r.normalize();
    }
    return r;
}

RemainingCode RemainingCode::prepend(std::shared_ptr<const Code> code) const {
    if (!code || code->empty()) return *this;
    RemainingCode r;
    r.code_ = std::move(code);
    r.pos_ = 0;
    if (code_) r.rest_ = std::make_shared<const Frame>(Frame{code_, pos_, rest_});
    return r;
}

Code RemainingCode::materialize() const {
    Code out;
    out.reserve(size());
    for (RemainingCode r = *this; !r.empty(); r = r.tail()) out.push_back(r.head());
    return out;
}

bool operator==(const RemainingCode& a, const RemainingCode& b) {
    RemainingCode x = a;
    RemainingCode y = b;
    for (;;) {
        if (x.code_ == y.code_ && x.pos_ == y.pos_ && x.rest_ == y.rest_) return true;
        if (x.empty() || y.empty()) return false;
        if (!(x.head() == y.head())) return false;
        x = x.tail();
        y = y.tail();
    }
}

MachineState MachineState::initial(Code code, const State& s) {
    MachineState ms;
    ms.code = RemainingCode(std::make_shared<const Code>(std::move(code)));
    ms.store = s.memory;
    ms.input = s.input;
    ms.output = s.output;
    return ms;
}

namespace {

MachineState fault(const MachineState& ms, ErrorKind e) {
    MachineState next = ms;
    next.status = Faulted{std::move(e)};
    return next;
}

Value pop(MachineState& ms) {
    if (ms.stack.empty()) throw MachineMisuse("stack underflow");
    Value v = std::move(ms.stack.back());
    ms.stack.pop_back();
    return v;
}

} // namespace

MachineState step(const MachineState& ms) {
    if (!ms.running()) throw MachineMisuse("step applied to a terminated configuration (" + format_status(ms.status) + ")");

    if (ms.code.empty()) {
        MachineState next = ms;
        next.status = Halted{};
        return next;
    }

    const Instr& instr = ms.code.head();
    MachineState next = ms;
    next.code = ms.code.tail();

    if (const auto* p = std::get_if<PushConst>(&instr.op)) {
        next.stack.push_back(p->value);
    } else if (const auto* l = std::get_if<LoadVar>(&instr.op)) {
        Binding b = ms.store.lookup(l->id);
        if (!b) return fault(ms, UnboundIdentifier{l->id});
        next.stack.push_back(std::move(*b));
    } else if (const auto* s = std::get_if<Store>(&instr.op)) {
        Value v = pop(next);
        next.store = next.store.bind(s->id, std::move(v));
    } else if (const auto* br = std::get_if<Branch>(&instr.op)) {
        Value v = pop(next);
        if (!v.is_bool()) return fault(ms, TypeMismatch{"Bool", std::string(v.tag_name()), "if-condition"});
        next.code = next.code.prepend(v.as_bool() ? br->then_code.shared() : br->else_code.shared());
    } else if (const auto* r = std::get_if<ReadIn>(&instr.op)) {
        if (ms.input.empty()) return fault(ms, InputExhausted{});
        next.store = next.store.bind(r->id, next.input.front());
        next.input.erase(next.input.begin());
    } else {
        next.output.push_back(pop(next));
    }

    if (next.code.empty() && next.stack.empty()) next.status = Halted{};
    return next;
}

RunResult run_machine(const Code& code, const State& s, const RunOptions& options) {
    Trace trace;
    if (options.record_trace && options.trace_capacity > 0) trace.reserve(options.trace_capacity);
    trace.push_back(MachineState::initial(code, s));

    std::uint64_t steps = 0;
    while (trace.back().running()) {
        MachineState next = steps == options.step_limit ? fault(trace.back(), StepLimitExceeded{options.step_limit})
                                                        : step(trace.back());
        const bool capped = steps == options.step_limit;
        ++steps;
        if (options.record_trace) trace.push_back(std::move(next));
        else trace.back() = std::move(next);
        if (capped) break;
    }

    const MachineState& last = trace.back();
    if (const auto* f = std::get_if<Faulted>(&last.status)) {
        return RunResult{Err{f->error}, std::move(trace)};
    }
    return RunResult{Done{last.state()}, std::move(trace)};
}

std::string format_instr(const Instr& i) {
    struct Visitor {
        std::string operator()(const PushConst& p) const { return "PushConst(" + format_value(p.value) + ")"; }
        std::string operator()(const LoadVar& l) const { return "LoadVar(" + l.id.name() + ")"; }
        std::string operator()(const Store& s) const { return "Store(" + s.id.name() + ")"; }
        std::string operator()(const Branch& b) const {
            return "Branch(" + format_code(*b.then_code) + ", " + format_code(*b.else_code) + ")";
        }
        std::string operator()(const ReadIn& r) const { return "ReadIn(" + r.id.name() + ")"; }
        std::string operator()(const WriteOut&) const { return "WriteOut"; }
    };
    return std::visit(Visitor{}, i.op);
}

std::string format_code(const Code& code) {
    std::string s = "[";
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i > 0) s += ", ";
        s += format_instr(code[i]);
    }
    return s + "]";
}

std::string format_status(const Status& s) {
    if (std::holds_alternative<Running>(s)) return "Running";
    if (std::holds_alternative<Halted>(s)) return "Halted";
    return "Faulted(" + describe(std::get<Faulted>(s).error) + ")";
}

std::string format_config(std::size_t index, const MachineState& ms) {
    return "#" + std::to_string(index) + " code=" + std::to_string(ms.code.size()) + " stack=" +
           format_values(ms.stack) + " " + format_memory(ms.store) + " in" + format_values(ms.input) +
           " out" + format_values(ms.output) + " status=" + format_status(ms.status);
}

std::string format_trace(const Trace& trace) {
    std::string s;
    for (std::size_t i = 0; i < trace.size(); ++i) s += format_config(i, trace[i]) + "\n";
    return s;
}

} // namespace amcm
