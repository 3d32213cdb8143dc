#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "athos/diagnostic.hpp"
#include "athos/keywords.hpp"
#include "athos/model.hpp"
#include "athos/registry.hpp"
#include "athos/text.hpp"

namespace athos {

namespace detail {

inline std::string control_path(std::size_t index) {
    return "controls/" + std::to_string(index);
}

inline void check_name(std::vector<Diagnostic>& out, const std::string& name, const std::string& path) {
    if (!text::is_identifier(name)) {
        out.push_back({Severity::Error, std::string(codes::bad_ident), path,
                       "'" + name + "' is not a valid identifier"});
    } else if (is_reserved_name(name)) {
        out.push_back({Severity::Error, std::string(codes::reserved_word), path,
                       "'" + name + "' is reserved in the generated C# code"});
    }
}

inline void check_size(std::vector<Diagnostic>& out, std::int64_t value, const std::string& path) {
    if (value < 1) {
        out.push_back({Severity::Error, std::string(codes::nonpositive_size), path,
                       "size must be at least 1, got " + std::to_string(value)});
    }
}

inline bool inside(const ControlSpec& c, const FormSpec& f) {
    const std::int64_t right = std::int64_t{c.x} + c.width;
    const std::int64_t bottom = std::int64_t{c.y} + c.height;
    return c.x >= 0 && c.y >= 0 && right <= f.width && bottom <= f.height;
}

inline bool intersects(const ControlSpec& a, const ControlSpec& b) {
    if (a.width < 1 || a.height < 1 || b.width < 1 || b.height < 1) return false;
    const auto ax2 = std::int64_t{a.x} + a.width, ay2 = std::int64_t{a.y} + a.height;
    const auto bx2 = std::int64_t{b.x} + b.width, by2 = std::int64_t{b.y} + b.height;
    return a.x < bx2 && b.x < ax2 && a.y < by2 && b.y < ay2;
}

inline void check_extras(std::vector<Diagnostic>& out, const ControlSpec& c, const ControlKindDef& kind,
                         const std::string& base) {
    for (const auto& [key, value] : c.extra) {
        const std::string path = base + "/extra/" + key;
        const ExtraPropDef* prop = kind.find_extra(key);
        if (prop == nullptr) {
            out.push_back({Severity::Error, std::string(codes::bad_extra), path,
                           "kind '" + kind.kind_id + "' declares no property '" + key + "'"});
        } else if (prop->type == ScalarType::Color && std::holds_alternative<std::string>(value)) {
            if (!text::is_color(std::get<std::string>(value))) {
                out.push_back({Severity::Error, std::string(codes::bad_color), path,
                               "color must be #RRGGBB with uppercase hex digits"});
            }
        } else if (!extra_value_matches(prop->type, value)) {
            out.push_back({Severity::Error, std::string(codes::bad_extra), path,
                           "property '" + key + "' expects a " + std::string(scalar_type_name(prop->type))});
        }
    }
}

}  // namespace detail

// Checks a structurally parsed form against the naming, sizing and kind rules.
// Errors block export; warnings (W_*) only flag layout problems. The result is
// sorted by (path, code), ties kept in discovery order.
inline std::vector<Diagnostic> validate(const FormSpec& form, const ControlKindRegistry& reg) {
    std::vector<Diagnostic> out;

    detail::check_name(out, form.name, "name");
    detail::check_size(out, form.width, "width");
    detail::check_size(out, form.height, "height");

    for (std::size_t i = 0; i < form.controls.size(); ++i) {
        const ControlSpec& c = form.controls[i];
        const std::string base = detail::control_path(i);

        detail::check_name(out, c.name, base + "/name");
        if (c.name == form.name) {
            out.push_back({Severity::Error, std::string(codes::dup_name), base + "/name",
                           "'" + c.name + "' is also the form name"});
        } else {
            for (std::size_t j = 0; j < i; ++j) {
                if (form.controls[j].name == c.name) {
                    out.push_back({Severity::Error, std::string(codes::dup_name), base + "/name",
                                   "'" + c.name + "' is already used by " + detail::control_path(j)});
                    break;
                }
            }
        }

        const ControlKindDef* kind = reg.find(c.kind);
        if (kind == nullptr) {
            out.push_back({Severity::Error, std::string(codes::unknown_kind), base + "/kind",
                           "unknown control kind '" + c.kind + "'"});
        } else {
            detail::check_extras(out, c, *kind, base);
        }

        detail::check_size(out, c.width, base + "/width");
        detail::check_size(out, c.height, base + "/height");
        if (!(c.font.size_pt > 0.0) || !std::isfinite(c.font.size_pt)) {
            out.push_back({Severity::Error, std::string(codes::nonpositive_size), base + "/font/size_pt",
                           "font size must be positive, got " + text::format_number(c.font.size_pt)});
        }
        if (!text::is_color(c.font.color)) {
            out.push_back({Severity::Error, std::string(codes::bad_color), base + "/font/color",
                           "color '" + c.font.color + "' must be #RRGGBB with uppercase hex digits"});
        }

        if (!detail::inside(c, form)) {
            out.push_back({Severity::Warning, std::string(codes::out_of_bounds), base,
                           "'" + c.name + "' is not fully inside the " + std::to_string(form.width) + "x" +
                               std::to_string(form.height) + " client area"});
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (detail::intersects(form.controls[j], c)) {
                out.push_back({Severity::Warning, std::string(codes::overlap), base,
                               "'" + c.name + "' overlaps '" + form.controls[j].name + "' (" +
                                   detail::control_path(j) + ")"});
            }
        }
    }

    std::stable_sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
        if (a.path != b.path) return a.path < b.path;
        return a.code < b.code;
    });
    return out;
}

inline bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

// Throws ValidationFailed when the form has Error-severity findings.
inline void require_valid(const FormSpec& form, const ControlKindRegistry& reg) {
    auto diags = validate(form, reg);
    if (has_errors(diags)) throw ValidationFailed(std::move(diags));
}

}  // namespace athos
