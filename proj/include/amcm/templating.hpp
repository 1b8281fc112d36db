#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "amcm/domains.hpp"
#include "amcm/error.hpp"
#include "amcm/syntax.hpp"
#include "amcm/typecheck.hpp"

namespace amcm {

struct Literal {
    std::string text;
    bool operator==(const Literal&) const = default;
};

struct Slot {
    Ident name;
    TypeExpr type;
    bool operator==(const Slot&) const = default;
};

using Segment = std::variant<Literal, Slot>;

struct Template {
    std::vector<Segment> segments;
    bool operator==(const Template&) const = default;

    std::vector<Slot> slots() const;
};

using ContentRecord = std::map<Ident, ContentValue>;

struct Page {
    std::string text;
    bool operator==(const Page&) const = default;
};

/// `{{name:type}}` placeholders become slots, `\{{` is a literal `{{`,
/// and everything else is literal text. Slot names must be unique.
Template parse_template(std::string_view source);

/// Line-oriented `name = literal` records. Literals: integers, true/false,
/// double-quoted strings, tuples `(a, b)`, lists `[a; b]`, injections
/// `inj k l`. Blank lines and `#` comments are skipped.
ContentRecord parse_content(std::string_view source);

// A single content literal, e.g. `(1, [true; false])`.
ContentValue parse_content_value(std::string_view source);

struct BindError {
    enum class Kind { unbound, type_mismatch };

    Kind kind;
    Ident slot;
    std::string reason; // empty for unbound
    std::string path;   // empty for unbound

    bool operator==(const BindError&) const = default;
};

std::string describe(const BindError& e);

// Per-slot binding verdict, in template order. std::nullopt means OK.
struct SlotReport {
    Ident slot;
    std::optional<BindError> error;
};

std::vector<SlotReport> check_slots(const Template& t, const ContentRecord& c);

/// Atomic slots become assignments in `program` (right-nested Seq in slot
/// order; absent when the template has no atomic slot). Composite slots are
/// type-checked and kept in `side_table`.
struct CompiledBinding {
    std::optional<Com> program;
    std::map<Ident, ContentValue> side_table;

    bool operator==(const CompiledBinding&) const = default;
};

using BindResult = std::variant<CompiledBinding, BindError>;
using RenderResult = std::variant<Page, BindError>;

BindResult compile_binding(const Template& t, const ContentRecord& c);
RenderResult render(const Template& t, const ContentRecord& c);

std::string render_value(const ContentValue& cv);

} // namespace amcm
