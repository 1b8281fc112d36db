#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "amcm/box.hpp"
#include "amcm/denotational.hpp"
#include "amcm/domains.hpp"
#include "amcm/syntax.hpp"

namespace amcm {

struct Instr;
using Code = std::vector<Instr>;

struct PushConst {
    Value value;
    bool operator==(const PushConst&) const = default;
};
struct LoadVar {
    Ident id;
    bool operator==(const LoadVar&) const = default;
};
struct Store {
    Ident id;
    bool operator==(const Store&) const = default;
};
// Pops a Bool and splices the chosen arm in front of the remaining code.
struct Branch {
    Box<Code> then_code;
    Box<Code> else_code;
    bool operator==(const Branch&) const = default;
};
struct ReadIn {
    Ident id;
    bool operator==(const ReadIn&) const = default;
};
struct WriteOut {
    bool operator==(const WriteOut&) const = default;
};

struct Instr {
    std::variant<PushConst, LoadVar, Store, Branch, ReadIn, WriteOut> op;
    bool operator==(const Instr&) const = default;
};

Code compile_exp(const Exp& e);
Code compile_com(const Com& c);

// Instruction count including the contents of every Branch arm.
std::size_t total_instruction_count(const Code& code);

/// The code still to run. Persistent: tail() and prepend() return new values
/// and share the underlying instruction vectors, so copying a configuration
/// never copies code. Semantically it is just a sequence of instructions.
class RemainingCode {
public:
    RemainingCode() = default;
    explicit RemainingCode(std::shared_ptr<const Code> code);

    bool empty() const noexcept;
    std::size_t size() const noexcept;
    const Instr& head() const;
    RemainingCode tail() const;
    RemainingCode prepend(std::shared_ptr<const Code> code) const;
    Code materialize() const;

    friend bool operator==(const RemainingCode& a, const RemainingCode& b);

private:
    struct Frame {
        std::shared_ptr<const Code> code;
        std::size_t pos;
        std::shared_ptr<const Frame> next;
    };

    void normalize();

    std::shared_ptr<const Code> code_;
    std::size_t pos_ = 0;
    std::shared_ptr<const Frame> rest_;
};

struct Running {
    bool operator==(const Running&) const = default;
};
struct Halted {
    bool operator==(const Halted&) const = default;
};
struct Faulted {
    ErrorKind error;
    bool operator==(const Faulted&) const = default;
};
using Status = std::variant<Running, Halted, Faulted>;

struct MachineState {
    RemainingCode code;
    std::vector<Value> stack;
    MemoryMap store;
    std::vector<Value> input;
    std::vector<Value> output;
    Status status = Running{};

    static MachineState initial(Code code, const State& s);

    bool running() const noexcept { return std::holds_alternative<Running>(status); }
    State state() const { return State{store, input, output}; }

    bool operator==(const MachineState&) const = default;
};

using Trace = std::vector<MachineState>;

// Stepping a configuration that is not Running.
class MachineMisuse : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// One state change. A faulting instruction leaves code, stack, store and
/// streams as they were and only sets the status. When the code runs out
/// with an empty stack the machine halts in the same step.
MachineState step(const MachineState& ms);

struct RunOptions {
    std::uint64_t step_limit = 1'000'000;
    std::size_t trace_capacity = 0;
    // When false the trace holds only the final configuration.
    bool record_trace = true;
};

struct RunResult {
    ExecOutcome outcome;
    Trace trace;
};

RunResult run_machine(const Code& code, const State& s, const RunOptions& options = {});

std::string format_instr(const Instr& i);
std::string format_code(const Code& code);
std::string format_status(const Status& s);
// `#<n> code=<k> stack=[...] mem{...} in[...] out[...] status=<S>`
std::string format_config(std::size_t index, const MachineState& ms);
// One format_config line per entry, each terminated by '\n'.
std::string format_trace(const Trace& trace);

} // namespace amcm
