#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "athos/error.hpp"
#include "athos/model.hpp"
#include "athos/registry.hpp"
#include "athos/text.hpp"

// Editing operations used by the designer and the CLI. Every function takes
// the form by const reference and returns an updated copy; the input is never
// touched, so callers can keep their own edit history.
namespace athos {

namespace detail {

inline std::size_t control_index(const FormSpec& form, std::string_view name) {
    for (std::size_t i = 0; i < form.controls.size(); ++i) {
        if (form.controls[i].name == name) return i;
    }
    throw UnknownControl(std::string(name));
}

inline std::string field_path(std::size_t index, std::string_view field) {
    return "controls/" + std::to_string(index) + "/" + std::string(field);
}

inline bool name_taken(const FormSpec& form, std::string_view name) {
    return name == form.name || find_control(form, name) != nullptr;
}

}  // namespace detail

inline FormSpec add_control(const FormSpec& form, std::string_view kind_id, const ControlKindRegistry& reg,
                            Point at) {
    const ControlKindDef* kind = reg.find(kind_id);
    if (kind == nullptr) throw UnknownKind(std::string(kind_id));

    int n = 1;
    while (detail::name_taken(form, kind->kind_id + std::to_string(n))) ++n;

    ControlSpec c;
    c.name = kind->kind_id + std::to_string(n);
    c.kind = kind->kind_id;
    c.text = kind->display_name + std::to_string(n);
    c.x = at.x;
    c.y = at.y;
    c.width = kind->default_width;
    c.height = kind->default_height;
    for (const auto& prop : kind->extra_schema) c.extra.emplace(prop.name, prop.default_value);

    FormSpec out = form;
    out.controls.push_back(std::move(c));
    return out;
}

inline FormSpec move_control(const FormSpec& form, std::string_view name, Point to) {
    const auto i = detail::control_index(form, name);
    FormSpec out = form;
    out.controls[i].x = to.x;
    out.controls[i].y = to.y;
    return out;
}

inline FormSpec resize_control(const FormSpec& form, std::string_view name, Size to) {
    const auto i = detail::control_index(form, name);
    if (to.width < 1) throw InvalidValue(detail::field_path(i, "width"), "width must be at least 1");
    if (to.height < 1) throw InvalidValue(detail::field_path(i, "height"), "height must be at least 1");
    FormSpec out = form;
    out.controls[i].width = to.width;
    out.controls[i].height = to.height;
    return out;
}

inline FormSpec set_form_size(const FormSpec& form, int width, int height) {
    if (width < 1) throw InvalidValue("width", "width must be at least 1");
    if (height < 1) throw InvalidValue("height", "height must be at least 1");
    FormSpec out = form;
    out.width = width;
    out.height = height;
    return out;
}

inline FormSpec set_text(const FormSpec& form, std::string_view name, std::string text) {
    const auto i = detail::control_index(form, name);
    FormSpec out = form;
    out.controls[i].text = std::move(text);
    return out;
}

inline FormSpec set_font(const FormSpec& form, std::string_view name, FontSpec font) {
    const auto i = detail::control_index(form, name);
    if (font.family.empty()) throw InvalidValue(detail::field_path(i, "font/family"), "font family is empty");
    if (!(font.size_pt > 0.0) || !std::isfinite(font.size_pt)) {
        throw InvalidValue(detail::field_path(i, "font/size_pt"), "font size must be positive");
    }
    if (!text::is_color(font.color)) {
        throw InvalidValue(detail::field_path(i, "font/color"), "color must be #RRGGBB with uppercase hex digits");
    }
    FormSpec out = form;
    out.controls[i].font = std::move(font);
    return out;
}

inline FormSpec set_extra(const FormSpec& form, std::string_view name, std::string_view key, ExtraValue value,
                          const ControlKindRegistry& reg) {
    const auto i = detail::control_index(form, name);
    const ControlSpec& c = form.controls[i];
    const ControlKindDef* kind = reg.find(c.kind);
    if (kind == nullptr) throw InvalidValue(detail::field_path(i, "kind"), "unknown control kind '" + c.kind + "'");
    const std::string path = detail::field_path(i, "extra/" + std::string(key));
    const ExtraPropDef* prop = kind->find_extra(key);
    if (prop == nullptr) throw InvalidValue(path, "kind '" + c.kind + "' declares no such property");
    if (!extra_value_matches(prop->type, value)) {
        throw InvalidValue(path, "expected a " + std::string(scalar_type_name(prop->type)));
    }
    FormSpec out = form;
    out.controls[i].extra.insert_or_assign(std::string(key), std::move(value));
    return out;
}

// An empty comment clears it, same as nullopt.
inline FormSpec set_comment(const FormSpec& form, std::string_view name, std::optional<std::string> comment) {
    const auto i = detail::control_index(form, name);
    FormSpec out = form;
    if (comment && comment->empty()) comment.reset();
    out.controls[i].comment = std::move(comment);
    return out;
}

}  // namespace athos
