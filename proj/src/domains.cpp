#include "amcm/domains.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace amcm {

bool is_reserved_word(std::string_view word) {
    static constexpr std::array<std::string_view, 6> reserved{"true", "false", "if",
                                                              "else", "read",  "write"};
    return std::find(reserved.begin(), reserved.end(), word) != reserved.end();
}

bool is_valid_identifier(std::string_view name) {
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (name.empty() || !alpha(name.front())) return false;
    if (!std::all_of(name.begin() + 1, name.end(), [&](char c) { return alpha(c) || digit(c); }))
        return false;
    return !is_reserved_word(name);
}

Ident::Ident(std::string name) : name_(std::move(name)) {
    if (!is_valid_identifier(name_)) {
        throw std::invalid_argument("invalid identifier: '" + name_ + "'");
    }
}

std::string_view Value::tag_name() const noexcept {
    switch (data_.index()) {
    case 0: return "Int";
    case 1: return "Bool";
    default: return "Str";
    }
}

MemoryMap::MemoryMap(std::initializer_list<std::pair<const std::string, Value>> entries) {
    for (const auto& [k, v] : entries) {
        *this = bind(Ident(k), v);
    }
}

Binding MemoryMap::lookup(const Ident& id) const {
    if (!entries_) return std::nullopt;
    auto it = entries_->find(id.name());
    if (it == entries_->end()) return std::nullopt;
    return it->second;
}

MemoryMap MemoryMap::bind(const Ident& id, Value v) const {
    auto next = entries_ ? std::make_shared<Entries>(*entries_) : std::make_shared<Entries>();
    next->insert_or_assign(id.name(), std::move(v));
    MemoryMap m;
    m.entries_ = std::move(next);
    return m;
}

const MemoryMap::Entries& MemoryMap::entries() const {
    static const Entries none;
    return entries_ ? *entries_ : none;
}

bool operator==(const MemoryMap& a, const MemoryMap& b) {
    if (a.entries_ == b.entries_) return true;
    return a.entries() == b.entries();
}

Binding lookup(const MemoryMap& m, const Ident& id) { return m.lookup(id); }

State bind_value(const State& s, const Ident& id, Value v) {
    return State{s.memory.bind(id, std::move(v)), s.input, s.output};
}

std::string describe(const ErrorKind& e) {
    struct Visitor {
        std::string operator()(const UnboundIdentifier& u) const {
            return "UnboundIdentifier(" + u.id.name() + ")";
        }
        std::string operator()(const TypeMismatch& t) const {
            return "TypeMismatch(expected " + t.expected + ", got " + t.got + ", at " + t.site + ")";
        }
        std::string operator()(const InputExhausted&) const { return "InputExhausted"; }
        std::string operator()(const StepLimitExceeded& s) const {
            return "StepLimitExceeded(" + std::to_string(s.limit) + ")";
        }
    };
    return std::visit(Visitor{}, e);
}

std::string quote_string(std::string_view raw) {
    std::string s = "\"";
    for (char c : raw) {
        switch (c) {
        case '"': s += "\\\""; break;
        case '\\': s += "\\\\"; break;
        case '\n': s += "\\n"; break;
        case '\t': s += "\\t"; break;
        case '\r': s += "\\r"; break;
        default: s += c;
        }
    }
    s += '"';
    return s;
}

std::string format_value(const Value& v) {
    if (v.is_int()) return std::to_string(v.as_int());
    if (v.is_bool()) return v.as_bool() ? "true" : "false";
    return quote_string(v.as_str());
}

std::string format_values(const std::vector<Value>& vs) {
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i > 0) s += ',';
        s += format_value(vs[i]);
    }
    return s + "]";
}

std::string format_memory(const MemoryMap& m) {
    std::string s = "mem{";
    bool first = true;
    for (const auto& [k, v] : m.entries()) {
        if (!first) s += ',';
        first = false;
        s += k + "=" + format_value(v);
    }
    return s + "}";
}

std::string format_state(const State& s) {
    return format_memory(s.memory) + " in" + format_values(s.input) + " out" + format_values(s.output);
}

} // namespace amcm
