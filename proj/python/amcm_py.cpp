#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "amcm/denotational.hpp"
#include "amcm/machine.hpp"
#include "amcm/syntax.hpp"
#include "amcm/templating.hpp"
#include "amcm/typecheck.hpp"

namespace py = pybind11;
using namespace amcm;

namespace {

Value to_value(const py::handle& h) {
    // bool first: Python booleans are ints too.
    if (py::isinstance<py::bool_>(h)) return Value::boolean(h.cast<bool>());
    if (py::isinstance<py::int_>(h)) return Value::integer(h.cast<std::int64_t>());
    if (py::isinstance<py::str>(h)) return Value::string(h.cast<std::string>());
    throw py::type_error("input values must be int, bool or str");
}

py::object from_value(const Value& v) {
    if (v.is_int()) return py::int_(v.as_int());
    if (v.is_bool()) return py::bool_(v.as_bool());
    return py::str(v.as_str());
}

const char* kind_name(const ErrorKind& e) {
    static const char* const names[] = {"UnboundIdentifier", "TypeMismatch", "InputExhausted", "StepLimitExceeded"};
    return names[e.index()];
}

Dialect dialect_of(bool strict) { return strict ? Dialect::strict : Dialect::extended; }

State initial_state(const std::vector<py::object>& input) {
    State s;
    for (const auto& v : input) s.input.push_back(to_value(v));
    return s;
}

py::dict outcome_dict(const ExecOutcome& o) {
    py::dict d;
    if (const auto* err = std::get_if<Err>(&o)) {
        d["ok"] = false;
        d["error"] = describe(err->error);
        d["error_kind"] = kind_name(err->error);
        return d;
    }
    const State& s = std::get<Done>(o).state;
    py::dict memory;
    for (const auto& [id, v] : s.memory.entries()) memory[py::str(id)] = from_value(v);
    py::list input;
    for (const auto& v : s.input) input.append(from_value(v));
    py::list output;
    for (const auto& v : s.output) output.append(from_value(v));
    d["ok"] = true;
    d["memory"] = memory;
    d["input"] = input;
    d["output"] = output;
    return d;
}

std::optional<Com> program_of(const std::string& source, bool strict) {
    return parse_program(source, dialect_of(strict));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Content machine: imperative core, abstract machine and typed templates";

    auto parse_error = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<StrictModeError>(m, "StrictModeError", parse_error.ptr());
    static py::exception<void> bind_error(m, "BindError", PyExc_ValueError);

    m.def(
        "parse",
        [](const std::string& source, bool strict) {
            const auto c = program_of(source, strict);
            return c ? pretty_print(*c) : std::string();
        },
        py::arg("source"), py::arg("strict") = false, "Parse a program and return its canonical text.");

    m.def(
        "run",
        [](const std::string& source, const std::vector<py::object>& input, bool strict) {
            const auto c = program_of(source, strict);
            const State s = initial_state(input);
            if (!c) return outcome_dict(Done{s});
            RunOptions opts;
            opts.record_trace = false;
            return outcome_dict(run_machine(compile_com(*c), s, opts).outcome);
        },
        py::arg("source"), py::arg("input") = std::vector<py::object>{}, py::arg("strict") = false,
        "Run a program on the machine. Returns a dict with ok, memory, input and output, or ok, error and "
        "error_kind.");

    m.def(
        "trace",
        [](const std::string& source, const std::vector<py::object>& input, bool strict) {
            const auto c = program_of(source, strict);
            const RunResult r = run_machine(c ? compile_com(*c) : Code{}, initial_state(input));
            std::vector<std::string> lines;
            for (std::size_t i = 0; i < r.trace.size(); ++i) lines.push_back(format_config(i, r.trace[i]));
            return lines;
        },
        py::arg("source"), py::arg("input") = std::vector<py::object>{}, py::arg("strict") = false,
        "Run a program and return one line per machine configuration.");

    m.def(
        "check_type",
        [](const std::string& type, const std::string& content) -> py::object {
            const CheckResult r = check(parse_type(type), parse_content_value(content));
            if (accepted(r)) return py::none();
            const auto& rej = std::get<Reject>(r);
            return py::make_tuple(rej.reason, rej.path);
        },
        py::arg("type"), py::arg("content"),
        "Type-check a content literal. Returns None when accepted, else (reason, path).");

    m.def(
        "check_slots",
        [](const std::string& tpl, const std::string& content) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& r : check_slots(parse_template(tpl), parse_content(content))) {
                out.emplace_back(r.slot.name(), r.error ? describe(*r.error) : "OK");
            }
            return out;
        },
        py::arg("template"), py::arg("content"), "Per-slot verdicts as (name, verdict) pairs.");

    m.def(
        "render",
        [](const std::string& tpl, const std::string& content) {
            RenderResult r = render(parse_template(tpl), parse_content(content));
            if (auto* e = std::get_if<BindError>(&r)) {
                PyErr_SetString(bind_error.ptr(), (e->slot.name() + ": " + describe(*e)).c_str());
                throw py::error_already_set();
            }
            return std::get<Page>(r).text;
        },
        py::arg("template"), py::arg("content"), "Render a template against a content record.");
}
