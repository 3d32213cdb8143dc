#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "athos/error.hpp"
#include "athos/model.hpp"
#include "athos/text.hpp"

namespace athos {

struct ExtraPropDef {
    std::string name;
    ScalarType type = ScalarType::Bool;
    ExtraValue default_value = false;
    std::string csharp_property;
};

struct ControlKindDef {
    std::string kind_id;
    std::string display_name;
    std::string csharp_type;
    int default_width = 1;
    int default_height = 1;
    std::vector<ExtraPropDef> extra_schema;

    const ExtraPropDef* find_extra(std::string_view prop) const {
        for (const auto& p : extra_schema) {
            if (p.name == prop) return &p;
        }
        return nullptr;
    }
};

// True when value is a legal value of the given scalar type.
inline bool extra_value_matches(ScalarType type, const ExtraValue& value) {
    switch (type) {
        case ScalarType::Bool: return std::holds_alternative<bool>(value);
        case ScalarType::Integer: return std::holds_alternative<std::int64_t>(value);
        case ScalarType::String: return std::holds_alternative<std::string>(value);
        case ScalarType::Color:
            return std::holds_alternative<std::string>(value) && text::is_color(std::get<std::string>(value));
    }
    return false;
}

namespace detail {

inline bool is_kind_id(std::string_view s) {
    if (s.empty() || !(s.front() >= 'a' && s.front() <= 'z')) return false;
    for (char c : s) {
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
    }
    return true;
}

inline bool is_qualified_name(std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = 0;
    while (true) {
        auto dot = s.find('.', start);
        auto seg = s.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
        if (!text::is_identifier(seg)) return false;
        if (dot == std::string_view::npos) return true;
        start = dot + 1;
    }
}

inline void check_kind_def(const ControlKindDef& def) {
    // Generated names are kind_id + digits, so a lowercase id keeps them
    // valid identifiers that can never collide with a keyword.
    if (!is_kind_id(def.kind_id)) {
        throw InvalidKindDef("kind_id '" + def.kind_id + "' must match [a-z][a-z0-9_]*");
    }
    if (!is_qualified_name(def.csharp_type)) {
        throw InvalidKindDef("csharp_type '" + def.csharp_type + "' is not a qualified C# type name");
    }
    if (def.default_width < 1 || def.default_height < 1) {
        throw InvalidKindDef("default size of kind '" + def.kind_id + "' must be at least 1x1");
    }
    std::set<std::string, std::less<>> seen;
    for (const auto& prop : def.extra_schema) {
        if (prop.name.empty()) throw InvalidKindDef("extra property with empty name in kind '" + def.kind_id + "'");
        if (!seen.insert(prop.name).second) {
            throw InvalidKindDef("duplicate extra property '" + prop.name + "' in kind '" + def.kind_id + "'");
        }
        if (!text::is_identifier(prop.csharp_property)) {
            throw InvalidKindDef("extra property '" + prop.name + "' maps to invalid C# property '" +
                                 prop.csharp_property + "'");
        }
        if (!extra_value_matches(prop.type, prop.default_value)) {
            throw InvalidKindDef("default of extra property '" + prop.name + "' is not a " +
                                 std::string(scalar_type_name(prop.type)));
        }
    }
}

}  // namespace detail

// Ordered set of control kinds, keyed by kind_id, in registration order.
class ControlKindRegistry {
public:
    const ControlKindDef* find(std::string_view kind_id) const {
        for (const auto& k : kinds_) {
            if (k.kind_id == kind_id) return &k;
        }
        return nullptr;
    }

    bool contains(std::string_view kind_id) const { return find(kind_id) != nullptr; }
    std::size_t size() const { return kinds_.size(); }
    auto begin() const { return kinds_.begin(); }
    auto end() const { return kinds_.end(); }

private:
    friend ControlKindRegistry register_kind(ControlKindRegistry reg, ControlKindDef def);
    friend ControlKindRegistry default_registry();

    std::vector<ControlKindDef> kinds_;
};

inline ControlKindRegistry register_kind(ControlKindRegistry reg, ControlKindDef def) {
    detail::check_kind_def(def);
    if (reg.contains(def.kind_id)) throw DuplicateKind(def.kind_id);
    reg.kinds_.push_back(std::move(def));
    return reg;
}

// The three built-in kinds, sized like the stock WinForms designer defaults.
inline ControlKindRegistry default_registry() {
    ControlKindRegistry reg;
    reg.kinds_.push_back(ControlKindDef{
        "label", "Label", "System.Windows.Forms.Label", 100, 23,
        {{"autosize", ScalarType::Bool, true, "AutoSize"}}});
    reg.kinds_.push_back(ControlKindDef{
        "textbox", "TextBox", "System.Windows.Forms.TextBox", 100, 20,
        {{"multiline", ScalarType::Bool, false, "Multiline"},
         {"readonly", ScalarType::Bool, false, "ReadOnly"}}});
    reg.kinds_.push_back(ControlKindDef{"button", "Button", "System.Windows.Forms.Button", 75, 23, {}});
    return reg;
}

}  // namespace athos
