#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "athos/error.hpp"
#include "athos/keywords.hpp"
#include "athos/model.hpp"
#include "athos/registry.hpp"
#include "athos/text.hpp"
#include "athos/validate.hpp"

namespace athos {

struct CodegenOptions {
    std::string namespace_name = "AthosGenerated";
    bool emit_comments = true;
};

struct SourceFile {
    std::string filename;
    std::string content;
};

inline constexpr std::string_view generated_header = "// Generated by athos-forge. Do not edit.";

namespace cs {

// Regular C# string literal. Besides the usual escapes, the Unicode line
// terminators U+0085/U+2028/U+2029 are escaped since C# forbids them raw
// inside a literal.
inline std::string string_literal(std::string_view s) {
    std::string out = "\"";
    std::size_t pos = 0;
    while (pos < s.size()) {
        const char32_t cp = text::next_code_point(s, pos);
        switch (cp) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\r': out += "\\r"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case 0x85: out += "\\u0085"; break;
            case 0x2028: out += "\\u2028"; break;
            case 0x2029: out += "\\u2029"; break;
            default: text::append_utf8(out, cp);
        }
    }
    out += '"';
    return out;
}

// Splits on every C# line terminator (CR, LF, CRLF, U+0085, U+2028, U+2029)
// so each piece can sit behind its own "//".
inline std::vector<std::string> comment_lines(std::string_view s) {
    std::vector<std::string> lines(1);
    std::size_t pos = 0;
    while (pos < s.size()) {
        const char32_t cp = text::next_code_point(s, pos);
        if (cp == '\r') {
            if (pos < s.size() && s[pos] == '\n') ++pos;
            lines.emplace_back();
        } else if (cp == '\n' || cp == 0x85 || cp == 0x2028 || cp == 0x2029) {
            lines.emplace_back();
        } else {
            text::append_utf8(lines.back(), cp);
        }
    }
    return lines;
}

inline std::string font_style(const FontSpec& f) {
    if (f.bold && f.italic) return "System.Drawing.FontStyle.Bold | System.Drawing.FontStyle.Italic";
    if (f.bold) return "System.Drawing.FontStyle.Bold";
    if (f.italic) return "System.Drawing.FontStyle.Italic";
    return "System.Drawing.FontStyle.Regular";
}

inline std::string color_expr(std::string_view color) {
    return "System.Drawing.ColorTranslator.FromHtml(" + string_literal(color) + ")";
}

inline std::string extra_literal(ScalarType type, const ExtraValue& v) {
    if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    if (const std::int64_t* n = std::get_if<std::int64_t>(&v)) return std::to_string(*n);
    const auto& s = std::get<std::string>(v);
    return type == ScalarType::Color ? color_expr(s) : string_literal(s);
}

inline bool is_namespace_name(std::string_view ns) {
    if (ns.empty()) return false;
    std::size_t start = 0;
    while (true) {
        const auto dot = ns.find('.', start);
        const auto seg = ns.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
        if (!text::is_identifier(seg) || is_csharp_keyword(seg)) return false;
        if (dot == std::string_view::npos) return true;
        start = dot + 1;
    }
}

class Emitter {
public:
    void line(int indent, std::string_view s) {
        if (!s.empty()) out_.append(static_cast<std::size_t>(indent) * 4, ' ');
        out_ += s;
        out_ += '\n';
    }

    std::string take() { return std::move(out_); }

private:
    std::string out_;
};

}  // namespace cs

// Compiles a form into a single C# source file holding a complete partial
// class with an InitializeComponent() in WinForms designer style.
inline SourceFile generate_csharp(const FormSpec& form, const ControlKindRegistry& reg,
                                  const CodegenOptions& opts = {}) {
    if (!cs::is_namespace_name(opts.namespace_name)) {
        throw InvalidValue("namespace", "'" + opts.namespace_name + "' is not a valid C# namespace name");
    }
    require_valid(form, reg);

    cs::Emitter e;
    e.line(0, generated_header);
    e.line(0, "namespace " + opts.namespace_name);
    e.line(0, "{");
    e.line(1, "public partial class " + form.name + " : System.Windows.Forms.Form");
    e.line(1, "{");
    for (const auto& c : form.controls) {
        e.line(2, "private " + reg.find(c.kind)->csharp_type + " " + c.name + ";");
    }
    if (!form.controls.empty()) e.line(0, "");
    e.line(2, "public " + form.name + "()");
    e.line(2, "{");
    e.line(3, "InitializeComponent();");
    e.line(2, "}");
    e.line(0, "");
    e.line(2, "private void InitializeComponent()");
    e.line(2, "{");

    for (const auto& c : form.controls) {
        e.line(3, "this." + c.name + " = new " + reg.find(c.kind)->csharp_type + "();");
    }
    for (const auto& c : form.controls) {
        const ControlKindDef& kind = *reg.find(c.kind);
        const std::string self = "this." + c.name;
        e.line(3, "//");
        e.line(3, "// " + c.name);
        if (opts.emit_comments && has_comment(c)) {
            for (const auto& l : cs::comment_lines(*c.comment)) e.line(3, l.empty() ? "//" : "// " + l);
        }
        e.line(3, "//");
        e.line(3, self + ".Name = " + cs::string_literal(c.name) + ";");
        e.line(3, self + ".Text = " + cs::string_literal(c.text) + ";");
        e.line(3, self + ".Location = new System.Drawing.Point(" + std::to_string(c.x) + ", " + std::to_string(c.y) +
                      ");");
        e.line(3, self + ".Size = new System.Drawing.Size(" + std::to_string(c.width) + ", " +
                      std::to_string(c.height) + ");");
        e.line(3, self + ".Font = new System.Drawing.Font(" + cs::string_literal(c.font.family) + ", " +
                      text::format_number(c.font.size_pt) + "F, " + cs::font_style(c.font) + ");");
        e.line(3, self + ".ForeColor = " + cs::color_expr(c.font.color) + ";");
        for (const auto& [key, value] : c.extra) {
            const ExtraPropDef& prop = *kind.find_extra(key);
            e.line(3, self + "." + prop.csharp_property + " = " + cs::extra_literal(prop.type, value) + ";");
        }
    }
    for (const auto& c : form.controls) {
        e.line(3, "this.Controls.Add(this." + c.name + ");");
    }
    e.line(3, "//");
    e.line(3, "// " + form.name);
    e.line(3, "//");
    e.line(3, "this.ClientSize = new System.Drawing.Size(" + std::to_string(form.width) + ", " +
                  std::to_string(form.height) + ");");
    e.line(3, "this.Text = " + cs::string_literal(form.title) + ";");
    e.line(3, "this.Name = " + cs::string_literal(form.name) + ";");
    e.line(2, "}");
    e.line(1, "}");
    e.line(0, "}");

    return SourceFile{form.name + ".cs", e.take()};
}

}  // namespace athos
