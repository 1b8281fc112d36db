#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace amcm {

bool is_reserved_word(std::string_view word);
bool is_valid_identifier(std::string_view name);

/// An identifier of the language: `[A-Za-z_][A-Za-z0-9_]*`, not a reserved
/// word. Construction throws std::invalid_argument otherwise.
class Ident {
public:
    explicit Ident(std::string name);

    const std::string& name() const noexcept { return name_; }

    auto operator<=>(const Ident&) const = default;

private:
    std::string name_;
};

/// Int + Bool + String. The active alternative is the component index of
/// the disjunctive sum.
class Value {
public:
    static Value integer(std::int64_t v) { return Value(Data(std::in_place_index<0>, v)); }
    static Value boolean(bool v) { return Value(Data(std::in_place_index<1>, v)); }
    static Value string(std::string v) { return Value(Data(std::in_place_index<2>, std::move(v))); }

    bool is_int() const noexcept { return data_.index() == 0; }
    bool is_bool() const noexcept { return data_.index() == 1; }
    bool is_str() const noexcept { return data_.index() == 2; }

    std::int64_t as_int() const { return std::get<0>(data_); }
    bool as_bool() const { return std::get<1>(data_); }
    const std::string& as_str() const { return std::get<2>(data_); }

    // "Int", "Bool" or "Str".
    std::string_view tag_name() const noexcept;

    bool operator==(const Value&) const = default;

private:
    using Data = std::variant<std::int64_t, bool, std::string>;
    explicit Value(Data d) : data_(std::move(d)) {}
    Data data_;
};

/// Bound(v) is an engaged optional; Unbound is std::nullopt.
using Binding = std::optional<Value>;

/// Ide -> [Value + {unbound}], stored with finite support: identifiers not
/// present are unbound. Immutable; bind() returns a new map and shares
/// nothing mutable with the original.
class MemoryMap {
public:
    using Entries = std::map<std::string, Value, std::less<>>;

    MemoryMap() = default;
    MemoryMap(std::initializer_list<std::pair<const std::string, Value>> entries);

    Binding lookup(const Ident& id) const;
    MemoryMap bind(const Ident& id, Value v) const;

    std::size_t size() const noexcept { return entries_ ? entries_->size() : 0; }
    bool empty() const noexcept { return size() == 0; }

    // Entries in lexicographic key order.
    const Entries& entries() const;

    friend bool operator==(const MemoryMap& a, const MemoryMap& b);

private:
    std::shared_ptr<const Entries> entries_;
};

struct State {
    MemoryMap memory;
    std::vector<Value> input;
    std::vector<Value> output;

    bool operator==(const State&) const = default;
};

Binding lookup(const MemoryMap& m, const Ident& id);
State bind_value(const State& s, const Ident& id, Value v);

struct UnboundIdentifier {
    Ident id;
    bool operator==(const UnboundIdentifier&) const = default;
};

struct TypeMismatch {
    std::string expected;
    std::string got;
    std::string site;
    bool operator==(const TypeMismatch&) const = default;
};

struct InputExhausted {
    bool operator==(const InputExhausted&) const = default;
};

// Raised only by the machine's step cap; the language itself always terminates.
struct StepLimitExceeded {
    std::uint64_t limit;
    bool operator==(const StepLimitExceeded&) const = default;
};

using ErrorKind = std::variant<UnboundIdentifier, TypeMismatch, InputExhausted, StepLimitExceeded>;

// e.g. "UnboundIdentifier(y)", "TypeMismatch(expected Bool, got Int, at if-condition)".
std::string describe(const ErrorKind& e);

// Canonical text forms shared by traces, the CLI and golden files.
std::string quote_string(std::string_view raw);
std::string format_value(const Value& v);
std::string format_values(const std::vector<Value>& vs);
std::string format_memory(const MemoryMap& m);
std::string format_state(const State& s);

} // namespace amcm
