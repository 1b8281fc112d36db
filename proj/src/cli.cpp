#include "amcm/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "amcm/machine.hpp"
#include "amcm/syntax.hpp"
#include "amcm/templating.hpp"

namespace amcm::cli {

int exit_code_for(const ErrorKind& e) {
    struct Visitor {
        int operator()(const UnboundIdentifier&) const { return exit_unbound; }
        int operator()(const TypeMismatch&) const { return exit_type_mismatch; }
        int operator()(const InputExhausted&) const { return exit_input_exhausted; }
        // Unreachable for loop-free programs; grouped with the runtime faults.
        int operator()(const StepLimitExceeded&) const { return exit_type_mismatch; }
    };
    return std::visit(Visitor{}, e);
}

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A ParseError tagged with the file it came from, already rendered.
struct FileParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    std::string raw = ss.str();
    std::string text;
    text.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == '\r' && i + 1 < raw.size() && raw[i + 1] == '\n') continue;
        text += raw[i];
    }
    return text;
}

// Writes to a sibling temporary and renames it into place, so a failed run
// never leaves a partial file at `path`.
void write_atomically(const std::string& path, const std::string& bytes) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".partial";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + path);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.close();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("cannot write " + path);
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot write " + path);
    }
}

std::vector<Value> parse_input_values(const std::string& csv) {
    std::vector<std::string> items;
    std::string cur;
    bool in_string = false;
    bool any = false;
    for (std::size_t i = 0; i < csv.size(); ++i) {
        const char c = csv[i];
        any = true;
        if (in_string) {
            cur += c;
            if (c == '\\' && i + 1 < csv.size()) {
                cur += csv[++i];
            } else if (c == '"') {
                in_string = false;
            }
        } else if (c == '"') {
            in_string = true;
            cur += c;
        } else if (c == ',') {
            items.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (any) items.push_back(cur);

    std::vector<Value> out;
    for (const auto& item : items) {
        ContentValue cv = [&] {
            try {
                return parse_content_value(item);
            } catch (const ParseError& e) {
                throw UsageError("--input: " + std::string(e.what()));
            }
        }();
        const auto* a = std::get_if<Atom>(&cv.node);
        if (!a) throw UsageError("--input: '" + item + "' is not an Int, Bool or String literal");
        out.push_back(a->value);
    }
    return out;
}

std::string format_parse_error(const std::string& path, const ParseError& e) {
    const bool strict = dynamic_cast<const StrictModeError*>(&e) != nullptr;
    std::ostringstream msg;
    msg << path << ":" << e.line();
    if (e.column() > 0) msg << ":" << e.column();
    msg << ": " << (strict ? "strict mode error: " : "parse error: ") << e.message();
    if (!e.expected().empty()) {
        msg << " (expected ";
        for (std::size_t i = 0; i < e.expected().size(); ++i) msg << (i ? ", " : "") << e.expected()[i];
        msg << ")";
    }
    return msg.str();
}

template <class F>
auto parsing(const std::string& path, F&& parse) {
    try {
        return parse();
    } catch (const ParseError& e) {
        throw FileParseError(format_parse_error(path, e));
    }
}

struct ProgramArgs {
    std::string path;
    bool strict = false;
    std::string input;
};

RunResult execute(const ProgramArgs& args) {
    const std::string source = read_text(args.path);
    std::optional<Com> program =
        parsing(args.path, [&] { return parse_program(source, args.strict ? Dialect::strict : Dialect::extended); });
    State initial;
    initial.input = parse_input_values(args.input);
    return run_machine(program ? compile_com(*program) : Code{}, initial);
}

int cmd_run(const ProgramArgs& args, std::ostream& out, std::ostream& err) {
    RunResult r = execute(args);
    if (const auto* e = std::get_if<Err>(&r.outcome)) {
        err << "error: " << describe(e->error) << "\n";
        return exit_code_for(e->error);
    }
    const State& s = std::get<Done>(r.outcome).state;
    out << format_state(s) << "\n";
    for (const auto& v : s.output) out << "out: " << format_value(v) << "\n";
    return exit_ok;
}

int cmd_trace(const ProgramArgs& args, std::ostream& out, std::ostream& err) {
    RunResult r = execute(args);
    out << format_trace(r.trace);
    if (const auto* e = std::get_if<Err>(&r.outcome)) {
        err << "error: " << describe(e->error) << "\n";
        return exit_code_for(e->error);
    }
    return exit_ok;
}

struct PagePaths {
    std::string template_path;
    std::string content_path;
    std::string out_path;
};

std::pair<Template, ContentRecord> load_pair(const PagePaths& p) {
    const std::string tpl_src = read_text(p.template_path);
    const std::string cnt_src = read_text(p.content_path);
    Template t = parsing(p.template_path, [&] { return parse_template(tpl_src); });
    ContentRecord c = parsing(p.content_path, [&] { return parse_content(cnt_src); });
    return {std::move(t), std::move(c)};
}

int code_for(const BindError& e) {
    return e.kind == BindError::Kind::unbound ? exit_unbound : exit_type_mismatch;
}

int cmd_check(const PagePaths& p, std::ostream& out) {
    auto [t, c] = load_pair(p);
    int code = exit_ok;
    for (const auto& report : check_slots(t, c)) {
        out << report.slot.name() << ": " << (report.error ? describe(*report.error) : "OK") << "\n";
        if (report.error && code == exit_ok) code = code_for(*report.error);
    }
    return code;
}

int cmd_render(const PagePaths& p, std::ostream& out, std::ostream& err) {
    auto [t, c] = load_pair(p);
    RenderResult r = render(t, c);
    if (const auto* e = std::get_if<BindError>(&r)) {
        err << "error: slot " << e->slot.name() << ": " << describe(*e) << "\n";
        return code_for(*e);
    }
    const std::string& bytes = std::get<Page>(r).text;
    if (p.out_path.empty()) {
        out << bytes;
    } else {
        write_atomically(p.out_path, bytes);
    }
    return exit_ok;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Typed template binding and a small imperative language with a tracing abstract machine",
                 "amcm"};
    app.require_subcommand(1);

    ProgramArgs prog;
    PagePaths page;

    auto* run_cmd = app.add_subcommand("run", "Execute a .amcm program and print the final state");
    auto* trace_cmd = app.add_subcommand("trace", "Print every machine configuration of a run");
    for (auto* sub : {run_cmd, trace_cmd}) {
        sub->add_option("program", prog.path, "Program file (.amcm)")->required();
        sub->add_flag("--strict", prog.strict, "Accept only the strict grammar");
        sub->add_option("--input", prog.input, "Input stream as comma-separated literals, e.g. 1,true,\"s\"");
    }
    auto* check_cmd = app.add_subcommand("check", "Type-check content against a template's slots");
    auto* render_cmd = app.add_subcommand("render", "Bind content into a template and write the page");
    for (auto* sub : {check_cmd, render_cmd}) {
        sub->add_option("template", page.template_path, "Template file (.tpl)")->required();
        sub->add_option("content", page.content_path, "Content file (.cnt)")->required();
    }
    render_cmd->add_option("-o,--output", page.out_path, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        if (*run_cmd) return cmd_run(prog, out, err);
        if (*trace_cmd) return cmd_trace(prog, out, err);
        if (*check_cmd) return cmd_check(page, out);
        return cmd_render(page, out, err);
    } catch (const FileParseError& e) {
        err << e.what() << "\n";
        return exit_parse;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_io;
    }
}

} // namespace amcm::cli
