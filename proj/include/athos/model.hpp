#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace athos {

// Scalar types an extra (kind-specific) property may hold. Colors travel as
// "#RRGGBB" strings; the kind schema decides whether a string is a color.
enum class ScalarType { Bool, Integer, String, Color };

inline std::string_view scalar_type_name(ScalarType t) {
    switch (t) {
        case ScalarType::Bool: return "bool";
        case ScalarType::Integer: return "integer";
        case ScalarType::String: return "string";
        case ScalarType::Color: return "color";
    }
    return "?";
}

using ExtraValue = std::variant<bool, std::int64_t, std::string>;

// Extra properties keyed by property name, kept in key order.
using ExtraMap = std::map<std::string, ExtraValue, std::less<>>;

struct FontSpec {
    std::string family = "Microsoft Sans Serif";
    double size_pt = 8.25;
    std::string color = "#000000";
    bool bold = false;
    bool italic = false;

    friend bool operator==(const FontSpec&, const FontSpec&) = default;
};

struct Point {
    int x = 0;
    int y = 0;
};

struct Size {
    int width = 0;
    int height = 0;
};

struct ControlSpec {
    std::string name;
    std::string kind;
    std::string text;
    int x = 0;
    int y = 0;
    int width = 1;
    int height = 1;
    FontSpec font;
    std::optional<std::string> comment;
    ExtraMap extra;

    friend bool operator==(const ControlSpec&, const ControlSpec&) = default;
};

struct FormSpec {
    std::string name;
    std::string title;
    int width = 600;
    int height = 400;
    std::vector<ControlSpec> controls;

    friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

// The red comment badge shows exactly when this holds.
inline bool has_comment(const ControlSpec& c) {
    return c.comment.has_value() && !c.comment->empty();
}

inline const ControlSpec* find_control(const FormSpec& form, std::string_view name) {
    for (const auto& c : form.controls) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

}  // namespace athos
