#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "athos/model.hpp"
#include "athos/registry.hpp"
#include "athos/text.hpp"
#include "athos/validate.hpp"

namespace athos {

struct RenderOptions {
    bool show_badges = true;
};

inline constexpr std::string_view svg_media_type = "image/svg+xml";

// Points to CSS pixels at 96 dpi.
inline double pt_to_px(double size_pt) {
    return size_pt * 4.0 / 3.0;
}

namespace svg {

// Stock widget palette.
inline constexpr std::string_view background_fill = "#F0F0F0";
inline constexpr std::string_view textbox_fill = "#FFFFFF";
inline constexpr std::string_view textbox_stroke = "#7A7A7A";
inline constexpr std::string_view button_fill = "#E1E1E1";
inline constexpr std::string_view button_stroke = "#ADADAD";
inline constexpr std::string_view generic_fill = "#FFFFFF";
inline constexpr std::string_view generic_stroke = "#000000";
inline constexpr std::string_view badge_fill = "#FF0000";
inline constexpr int badge_radius = 4;
inline constexpr int badge_inset = 5;
inline constexpr int text_inset = 3;

// num / den as the nearest double, printed with minimal digits. Every
// coordinate goes through a single division of exact integers so the text
// is the same on every platform.
inline std::string ratio(std::int64_t num, std::int64_t den) {
    return text::format_number(static_cast<double>(num) / static_cast<double>(den));
}

inline std::string num(std::int64_t v) {
    return std::to_string(v);
}

inline std::string font_attrs(const FontSpec& f) {
    return " fill=\"" + text::xml_escape(f.color) + "\" font-family=\"" + text::xml_escape(f.family) +
           "\" font-size=\"" + text::format_number(pt_to_px(f.size_pt)) + "\" font-weight=\"" +
           (f.bold ? "bold" : "normal") + "\" font-style=\"" + (f.italic ? "italic" : "normal") + "\"";
}

inline std::string rect(const ControlSpec& c, std::string_view fill, std::string_view stroke) {
    return "<rect x=\"" + num(c.x) + "\" y=\"" + num(c.y) + "\" width=\"" + num(c.width) + "\" height=\"" +
           num(c.height) + "\" fill=\"" + std::string(fill) + "\" stroke=\"" + std::string(stroke) +
           "\" stroke-width=\"1\"/>";
}

// Text centered on the control's rectangle.
inline std::string centered_text(const ControlSpec& c, std::string_view content) {
    return "<text x=\"" + ratio(2 * std::int64_t{c.x} + c.width, 2) + "\" y=\"" +
           ratio(2 * std::int64_t{c.y} + c.height, 2) + "\" text-anchor=\"middle\" dominant-baseline=\"central\"" +
           font_attrs(c.font) + ">" + text::xml_escape(content) + "</text>";
}

}  // namespace svg

// Draws the form's client area as an SVG 1.1 document: a background, then one
// <g data-name="..."> per control in control order, each with its kind's glyph
// and, for commented controls, a red badge at the top-right corner.
inline std::string render_svg(const FormSpec& form, const ControlKindRegistry& reg, const RenderOptions& opts = {}) {
    require_valid(form, reg);

    const std::string w = svg::num(form.width);
    const std::string h = svg::num(form.height);
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
           "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
    out += "  <rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"" +
           std::string(svg::background_fill) + "\"/>\n";

    for (const auto& c : form.controls) {
        out += "  <g data-name=\"" + text::xml_escape(c.name) + "\">\n";
        if (c.kind == "label") {
            // Baseline at 80% of the control height.
            out += "    <text x=\"" + svg::num(c.x) + "\" y=\"" + svg::ratio(5 * std::int64_t{c.y} + 4 * std::int64_t{c.height}, 5) +
                   "\"" + svg::font_attrs(c.font) + ">" + text::xml_escape(c.text) + "</text>\n";
        } else if (c.kind == "textbox") {
            const std::string clip = "clip-" + c.name;
            out += "    <clipPath id=\"" + clip + "\"><rect x=\"" + svg::num(c.x) + "\" y=\"" + svg::num(c.y) +
                   "\" width=\"" + svg::num(c.width) + "\" height=\"" + svg::num(c.height) + "\"/></clipPath>\n";
            out += "    " + svg::rect(c, svg::textbox_fill, svg::textbox_stroke) + "\n";
            out += "    <text x=\"" + svg::num(std::int64_t{c.x} + svg::text_inset) + "\" y=\"" +
                   svg::ratio(2 * std::int64_t{c.y} + c.height, 2) + "\" dominant-baseline=\"central\" clip-path=\"url(#" +
                   clip + ")\"" + svg::font_attrs(c.font) + ">" + text::xml_escape(c.text) + "</text>\n";
        } else if (c.kind == "button") {
            out += "    " + svg::rect(c, svg::button_fill, svg::button_stroke) + "\n";
            out += "    " + svg::centered_text(c, c.text) + "\n";
        } else {
            // Kinds added through register_kind: outlined box labelled with the name.
            out += "    " + svg::rect(c, svg::generic_fill, svg::generic_stroke) + "\n";
            out += "    " + svg::centered_text(c, c.name) + "\n";
        }
        if (opts.show_badges && has_comment(c)) {
            out += "    <circle cx=\"" + svg::num(std::int64_t{c.x} + c.width - svg::badge_inset) + "\" cy=\"" +
                   svg::num(std::int64_t{c.y} + svg::badge_inset) + "\" r=\"" + svg::num(svg::badge_radius) +
                   "\" fill=\"" + std::string(svg::badge_fill) + "\"/>\n";
        }
        out += "  </g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace athos
