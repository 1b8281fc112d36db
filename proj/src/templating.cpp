#include "amcm/templating.hpp"

#include <charconv>
#include <set>
#include <stdexcept>
#include <utility>

#include "amcm/machine.hpp"

namespace amcm {

std::vector<Slot> Template::slots() const {
    std::vector<Slot> out;
    for (const auto& seg : segments) {
        if (const auto* s = std::get_if<Slot>(&seg)) out.push_back(*s);
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

// Counts lines/columns over a prefix of the source for error positions.
std::pair<int, int> position_of(std::string_view src, std::size_t offset) {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < offset && i < src.size(); ++i) {
        if (src[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

class LiteralParser {
public:
    LiteralParser(std::string_view text, int line) : text_(text), line_(line) {}

    ContentValue value() {
        skip_space();
        if (at_end()) fail("expected content literal");
        const char c = text_[pos_];
        if (c == '"') return types::atom(Value::string(string_literal()));
        if (c == '(') return tuple();
        if (c == '[') return list();
        if (c == '-' || is_digit(c)) return types::atom(Value::integer(integer()));
        const std::string_view word = word_here();
        if (word == "true" || word == "false") {
            pos_ += word.size();
            return types::atom(Value::boolean(word == "true"));
        }
        if (word == "inj") {
            pos_ += word.size();
            skip_space();
            const std::size_t at = pos_;
            if (at_end() || !is_digit(text_[pos_])) fail("expected injection index");
            const std::int64_t k = integer();
            if (k < 1) {
                pos_ = at;
                fail("injection index must be at least 1");
            }
            return types::inj(static_cast<std::size_t>(k), value());
        }
        fail("expected content literal", {"integer", "true", "false", "string", "'('", "'['", "'inj'"});
    }

    // Accepts only trailing whitespace or a `#` comment.
    void finish() {
        skip_space();
        if (!at_end() && text_[pos_] != '#') fail("unexpected text after literal");
    }

    std::size_t pos() const { return pos_; }

private:
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_word(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || is_digit(c); }

    bool at_end() const { return pos_ >= text_.size(); }

    [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) const {
        throw ParseError(line_, static_cast<int>(pos_) + 1, msg, std::move(expected));
    }

    void skip_space() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }

    std::string_view word_here() const {
        std::size_t e = pos_;
        while (e < text_.size() && is_word(text_[e])) ++e;
        return text_.substr(pos_, e - pos_);
    }

    void expect(char c) {
        skip_space();
        if (at_end() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::int64_t integer() {
        const std::size_t start = pos_;
        if (text_[pos_] == '-') ++pos_;
        while (!at_end() && is_digit(text_[pos_])) ++pos_;
        std::int64_t v = 0;
        const char* first = text_.data() + start;
        const char* last = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last) {
            pos_ = start;
            fail(ec == std::errc::result_out_of_range ? "integer literal out of range" : "malformed integer");
        }
        return v;
    }

    std::string string_literal() {
        const std::size_t start = pos_;
        ++pos_;
        std::string out;
        for (;;) {
            if (at_end()) {
                pos_ = start;
                fail("unterminated string literal");
            }
            const char c = text_[pos_++];
            if (c == '"') return out;
            if (c != '\\') {
                out += c;
                continue;
            }
            if (at_end()) {
                pos_ = start;
                fail("unterminated string literal");
            }
            switch (text_[pos_++]) {
            case '"': out += '"'; break;
            case '\\': out += '\\'; break;
            case 'n': out += '\n'; break;
            case 't': out += '\t'; break;
            case 'r': out += '\r'; break;
            default: --pos_; fail("unknown escape sequence");
            }
        }
    }

    ContentValue tuple() {
        ++pos_;
        std::vector<ContentValue> items{value()};
        while (eat(',')) items.push_back(value());
        expect(')');
        return types::tuple(std::move(items));
    }

    ContentValue list() {
        ++pos_;
        std::vector<ContentValue> items;
        if (eat(']')) return types::list(std::move(items));
        items.push_back(value());
        while (eat(';')) items.push_back(value());
        expect(']');
        return types::list(std::move(items));
    }

    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

std::string atom_text(const Value& v) {
    if (v.is_int()) return std::to_string(v.as_int());
    if (v.is_bool()) return v.as_bool() ? "true" : "false";
    return v.as_str();
}

Exp literal_of(const Value& v) {
    if (v.is_int()) return ast::num(v.as_int());
    if (v.is_bool()) return v.as_bool() ? ast::t() : ast::f();
    return ast::str(v.as_str());
}

std::optional<BindError> bind_error(const Slot& slot, const ContentRecord& c) {
    auto it = c.find(slot.name);
    if (it == c.end()) return BindError{BindError::Kind::unbound, slot.name, {}, {}};
    CheckResult r = check(slot.type, it->second);
    if (const auto* rej = std::get_if<Reject>(&r)) {
        return BindError{BindError::Kind::type_mismatch, slot.name, rej->reason, rej->path};
    }
    return std::nullopt;
}

} // namespace

Template parse_template(std::string_view source) {
    Template t;
    std::string literal;
    std::set<std::string> seen;
    auto flush = [&] {
        if (!literal.empty()) t.segments.emplace_back(Literal{std::move(literal)});
        literal.clear();
    };

    std::size_t i = 0;
    while (i < source.size()) {
        if (source.compare(i, 3, "\\{{") == 0) {
            literal += "{{";
            i += 3;
            continue;
        }
        if (source.compare(i, 2, "{{") != 0) {
            literal += source[i++];
            continue;
        }
        const auto [line, col] = position_of(source, i);
        const std::size_t close = source.find("}}", i + 2);
        if (close == std::string_view::npos) throw ParseError(line, col, "unterminated placeholder");
        const std::string_view inner = source.substr(i + 2, close - i - 2);
        const std::size_t colon = inner.find(':');
        if (colon == std::string_view::npos) throw ParseError(line, col, "placeholder needs the form {{name:type}}");
        const std::string name(trim(inner.substr(0, colon)));
        if (!is_valid_identifier(name)) throw ParseError(line, col, "invalid slot name '" + name + "'");
        TypeExpr type = [&] {
            try {
                return parse_type(inner.substr(colon + 1));
            } catch (const ParseError& e) {
                throw ParseError(line, col + 2 + static_cast<int>(colon) + e.column(),
                                 "bad slot type: " + e.message(), e.expected());
            }
        }();
        if (!seen.insert(name).second) throw ParseError(line, col, "duplicate slot \"" + name + "\"");
        flush();
        t.segments.emplace_back(Slot{Ident(name), std::move(type)});
        i = close + 2;
    }
    flush();
    return t;
}

ContentRecord parse_content(std::string_view source) {
    ContentRecord record;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= source.size()) {
        std::size_t end = source.find('\n', start);
        if (end == std::string_view::npos) end = source.size();
        std::string_view line = source.substr(start, end - start);
        start = end + 1;
        ++line_no;

        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, 0, "expected 'name = literal'");
        const std::string name(trim(line.substr(0, eq)));
        if (!is_valid_identifier(name)) throw ParseError(line_no, 0, "invalid content name '" + name + "'");

        // Columns reported relative to the whole line.
        LiteralParser rest(line.substr(eq + 1), line_no);
        ContentValue v = [&] {
            try {
                ContentValue cv = rest.value();
                rest.finish();
                return cv;
            } catch (const ParseError& e) {
                throw ParseError(line_no, e.column() + static_cast<int>(eq) + 1, e.message(), e.expected());
            }
        }();
        if (!record.emplace(Ident(name), std::move(v)).second) {
            throw ParseError(line_no, 0, "duplicate content key \"" + name + "\"");
        }
        if (end == source.size()) break;
    }
    return record;
}

ContentValue parse_content_value(std::string_view source) {
    LiteralParser p(source, 1);
    ContentValue v = p.value();
    p.finish();
    return v;
}

std::string describe(const BindError& e) {
    if (e.kind == BindError::Kind::unbound) return "UNBOUND";
    return "TYPE MISMATCH " + e.reason + " at " + e.path;
}

std::vector<SlotReport> check_slots(const Template& t, const ContentRecord& c) {
    std::vector<SlotReport> out;
    for (const Slot& slot : t.slots()) out.push_back({slot.name, bind_error(slot, c)});
    return out;
}

BindResult compile_binding(const Template& t, const ContentRecord& c) {
    CompiledBinding result;
    std::vector<Com> assigns;
    for (const Slot& slot : t.slots()) {
        if (auto err = bind_error(slot, c)) return *err;
        const ContentValue& cv = c.at(slot.name);
        if (slot.type.atomic()) {
            assigns.push_back(Com{Assign{slot.name, literal_of(std::get<Atom>(cv.node).value)}});
        } else {
            result.side_table.emplace(slot.name, cv);
        }
    }
    for (auto it = assigns.rbegin(); it != assigns.rend(); ++it) {
        result.program = result.program ? ast::seq(std::move(*it), std::move(*result.program)) : std::move(*it);
    }
    return result;
}

RenderResult render(const Template& t, const ContentRecord& c) {
    BindResult bound = compile_binding(t, c);
    if (auto* err = std::get_if<BindError>(&bound)) return std::move(*err);
    const auto& compiled = std::get<CompiledBinding>(bound);

    State final_state;
    if (compiled.program) {
        RunResult run = run_machine(compile_com(*compiled.program), State{});
        if (const auto* e = std::get_if<Err>(&run.outcome)) {
            throw std::logic_error("machine fault while rendering: " + describe(e->error));
        }
        final_state = std::get<Done>(run.outcome).state;
    }

    Page page;
    for (const auto& seg : t.segments) {
        if (const auto* lit = std::get_if<Literal>(&seg)) {
            page.text += lit->text;
            continue;
        }
        const auto& slot = std::get<Slot>(seg);
        if (slot.type.atomic()) {
            Binding b = final_state.memory.lookup(slot.name);
            if (!b) throw std::logic_error("slot " + slot.name.name() + " not bound after binding program");
            page.text += atom_text(*b);
        } else {
            page.text += render_value(compiled.side_table.at(slot.name));
        }
    }
    return page;
}

std::string render_value(const ContentValue& cv) {
    struct Visitor {
        std::string operator()(const Atom& a) const { return atom_text(a.value); }
        std::string operator()(const Tuple& t) const { return join(t.items, ", ", "(", ")"); }
        std::string operator()(const List& l) const { return join(l.items, "; ", "[", "]"); }
        std::string operator()(const Inj& i) const { return render_value(*i.payload); }

        static std::string join(const std::vector<ContentValue>& items, const char* sep, const char* open,
                                const char* close) {
            std::string s = open;
            for (std::size_t i = 0; i < items.size(); ++i) {
                if (i > 0) s += sep;
                s += render_value(items[i]);
            }
            return s + close;
        }
    };
    return std::visit(Visitor{}, cv.node);
}

} // namespace amcm
