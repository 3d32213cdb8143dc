#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "athos/error.hpp"
#include "athos/model.hpp"
#include "athos/text.hpp"

// Reading and writing `.athos.json` form documents. Parsing is strict (unknown
// keys are rejected) and structural only; semantic checks belong to
// validate(). Serialization is canonical down to the byte.
namespace athos {

inline constexpr int current_format_version = 1;
inline constexpr std::string_view document_extension = ".athos.json";

struct FormDocument {
    int athos_version = current_format_version;
    FormSpec form;

    friend bool operator==(const FormDocument&, const FormDocument&) = default;
};

enum class ParseErrorKind { Syntax, Schema, Version };

inline std::string_view parse_error_kind_name(ParseErrorKind k) {
    switch (k) {
        case ParseErrorKind::Syntax: return "syntax";
        case ParseErrorKind::Schema: return "schema";
        case ParseErrorKind::Version: return "version";
    }
    return "?";
}

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, std::string path, std::string message, std::optional<int> line = std::nullopt,
               std::optional<int> column = std::nullopt)
        : Error(describe(kind, path, message, line, column)),
          kind_(kind),
          path_(std::move(path)),
          message_(std::move(message)),
          line_(line),
          column_(column) {}

    ParseErrorKind kind() const noexcept { return kind_; }
    const std::string& path() const noexcept { return path_; }
    const std::string& message() const noexcept { return message_; }
    std::optional<int> line() const noexcept { return line_; }
    std::optional<int> column() const noexcept { return column_; }

private:
    static std::string describe(ParseErrorKind kind, const std::string& path, const std::string& message,
                                std::optional<int> line, std::optional<int> column) {
        std::string out{parse_error_kind_name(kind)};
        out += " error";
        if (line && column) out += " at " + std::to_string(*line) + ":" + std::to_string(*column);
        if (!path.empty()) out += " at '" + path + "'";
        out += ": " + message;
        return out;
    }

    ParseErrorKind kind_;
    std::string path_;
    std::string message_;
    std::optional<int> line_;
    std::optional<int> column_;
};

namespace detail {

using nlohmann::json;

inline std::string join_path(const std::string& base, std::string_view leaf) {
    if (base.empty()) return std::string(leaf);
    return base + "/" + std::string(leaf);
}

[[noreturn]] inline void schema_error(const std::string& path, std::string message) {
    throw ParseError(ParseErrorKind::Schema, path, std::move(message));
}

// Raised from the parser callback; converted to a Schema ParseError.
struct DuplicateKeyFound {
    std::string path;
};

// Tracks the current location while nlohmann's callback parser walks the
// input so duplicate object keys can be reported with a path.
class DuplicateKeyGuard {
public:
    bool operator()(int /*depth*/, json::parse_event_t event, json& parsed) {
        switch (event) {
            case json::parse_event_t::object_start:
            case json::parse_event_t::array_start:
                count_element();
                frames_.push_back({event == json::parse_event_t::object_start, {}, {}, -1});
                break;
            case json::parse_event_t::key: {
                auto& top = frames_.back();
                top.key = parsed.get<std::string>();
                if (!top.keys.insert(top.key).second) throw DuplicateKeyFound{current_path()};
                break;
            }
            case json::parse_event_t::value:
                count_element();
                break;
            case json::parse_event_t::object_end:
            case json::parse_event_t::array_end:
                frames_.pop_back();
                break;
        }
        return true;
    }

private:
    struct Frame {
        bool object;
        std::set<std::string, std::less<>> keys;
        std::string key;
        long index;
    };

    void count_element() {
        if (!frames_.empty() && !frames_.back().object) ++frames_.back().index;
    }

    std::string current_path() const {
        std::string path;
        for (const auto& f : frames_) {
            path = join_path(path, f.object ? f.key : std::to_string(f.index));
        }
        return path;
    }

    std::vector<Frame> frames_;
};

inline std::pair<int, int> line_column(std::string_view bytes, std::size_t offset) {
    offset = std::min(offset, bytes.size());
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
        if (bytes[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

// Checks that obj is an object holding only allowed keys and all required ones.
inline void expect_object(const json& obj, const std::string& path, std::initializer_list<std::string_view> required,
                          std::initializer_list<std::string_view> optional) {
    if (!obj.is_object()) schema_error(path, "expected an object");
    for (auto key : required) {
        if (!obj.contains(key)) schema_error(join_path(path, key), "missing required key '" + std::string(key) + "'");
    }
    for (const auto& item : obj.items()) {
        auto known = [&](std::initializer_list<std::string_view> keys) {
            for (auto k : keys) {
                if (k == item.key()) return true;
            }
            return false;
        };
        if (!known(required) && !known(optional)) {
            schema_error(join_path(path, item.key()), "unknown key '" + item.key() + "'");
        }
    }
}

inline std::string get_string(const json& v, const std::string& path) {
    if (!v.is_string()) schema_error(path, "expected a string");
    return v.get<std::string>();
}

inline bool get_bool(const json& v, const std::string& path) {
    if (!v.is_boolean()) schema_error(path, "expected a boolean");
    return v.get<bool>();
}

inline std::int64_t get_int64(const json& v, const std::string& path) {
    if (v.is_number_unsigned()) {
        const auto u = v.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
            schema_error(path, "integer out of range");
        }
        return static_cast<std::int64_t>(u);
    }
    if (!v.is_number_integer()) schema_error(path, "expected an integer");
    return v.get<std::int64_t>();
}

inline int get_int(const json& v, const std::string& path) {
    const auto n = get_int64(v, path);
    if (n < std::numeric_limits<int>::min() || n > std::numeric_limits<int>::max()) {
        schema_error(path, "integer out of range");
    }
    return static_cast<int>(n);
}

inline double get_number(const json& v, const std::string& path) {
    if (!v.is_number()) schema_error(path, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) schema_error(path, "number out of range");
    return d;
}

inline FontSpec read_font(const json& v, const std::string& path) {
    expect_object(v, path, {}, {"family", "size_pt", "color", "bold", "italic"});
    FontSpec font;
    if (v.contains("family")) {
        font.family = get_string(v["family"], path + "/family");
        if (font.family.empty()) schema_error(path + "/family", "font family must not be empty");
    }
    if (v.contains("size_pt")) font.size_pt = get_number(v["size_pt"], path + "/size_pt");
    if (v.contains("color")) font.color = get_string(v["color"], path + "/color");
    if (v.contains("bold")) font.bold = get_bool(v["bold"], path + "/bold");
    if (v.contains("italic")) font.italic = get_bool(v["italic"], path + "/italic");
    return font;
}

inline ExtraValue read_extra_value(const json& v, const std::string& path) {
    if (v.is_boolean()) return v.get<bool>();
    if (v.is_number_integer()) return get_int64(v, path);
    if (v.is_string()) return v.get<std::string>();
    schema_error(path, "extra values must be a boolean, integer or string");
}

inline ControlSpec read_control(const json& v, const std::string& path) {
    expect_object(v, path, {"name", "kind", "text", "x", "y", "width", "height"}, {"font", "comment", "extra"});
    ControlSpec c;
    c.name = get_string(v["name"], path + "/name");
    c.kind = get_string(v["kind"], path + "/kind");
    c.text = get_string(v["text"], path + "/text");
    c.x = get_int(v["x"], path + "/x");
    c.y = get_int(v["y"], path + "/y");
    c.width = get_int(v["width"], path + "/width");
    c.height = get_int(v["height"], path + "/height");
    if (v.contains("font")) c.font = read_font(v["font"], path + "/font");
    if (v.contains("comment")) c.comment = get_string(v["comment"], path + "/comment");
    if (v.contains("extra")) {
        const json& extra = v["extra"];
        if (!extra.is_object()) schema_error(path + "/extra", "expected an object");
        for (const auto& item : extra.items()) {
            c.extra.emplace(item.key(), read_extra_value(item.value(), path + "/extra/" + item.key()));
        }
    }
    return c;
}

inline FormSpec read_form(const json& v, const std::string& path) {
    expect_object(v, path, {"name", "title", "width", "height", "controls"}, {});
    FormSpec f;
    f.name = get_string(v["name"], path + "/name");
    f.title = get_string(v["title"], path + "/title");
    f.width = get_int(v["width"], path + "/width");
    f.height = get_int(v["height"], path + "/height");
    const json& controls = v["controls"];
    if (!controls.is_array()) schema_error(path + "/controls", "expected an array");
    f.controls.reserve(controls.size());
    for (std::size_t i = 0; i < controls.size(); ++i) {
        f.controls.push_back(read_control(controls[i], path + "/controls/" + std::to_string(i)));
    }
    return f;
}

// Canonical JSON writer: fixed key order, 2-space indent, LF only.
class CanonicalWriter {
public:
    std::string take() { return std::move(out_); }

    void document(const FormDocument& doc) {
        open('{');
        key("athos_version");
        out_ += std::to_string(doc.athos_version);
        key("form");
        form(doc.form);
        close('}');
        out_ += '\n';
    }

private:
    void form(const FormSpec& f) {
        open('{');
        key("name");
        string(f.name);
        key("title");
        string(f.title);
        key("width");
        out_ += std::to_string(f.width);
        key("height");
        out_ += std::to_string(f.height);
        key("controls");
        if (f.controls.empty()) {
            out_ += "[]";
            first_ = false;
        } else {
            open('[');
            for (const auto& c : f.controls) {
                element();
                control(c);
            }
            close(']');
        }
        close('}');
    }

    void control(const ControlSpec& c) {
        open('{');
        key("name");
        string(c.name);
        key("kind");
        string(c.kind);
        key("text");
        string(c.text);
        key("x");
        out_ += std::to_string(c.x);
        key("y");
        out_ += std::to_string(c.y);
        key("width");
        out_ += std::to_string(c.width);
        key("height");
        out_ += std::to_string(c.height);
        key("font");
        open('{');
        key("family");
        string(c.font.family);
        key("size_pt");
        out_ += text::format_number(c.font.size_pt);
        key("color");
        string(c.font.color);
        key("bold");
        out_ += c.font.bold ? "true" : "false";
        key("italic");
        out_ += c.font.italic ? "true" : "false";
        close('}');
        if (c.comment) {
            key("comment");
            string(*c.comment);
        }
        if (!c.extra.empty()) {
            key("extra");
            open('{');
            for (const auto& [k, v] : c.extra) {
                key(k);
                if (const bool* b = std::get_if<bool>(&v)) {
                    out_ += *b ? "true" : "false";
                } else if (const std::int64_t* n = std::get_if<std::int64_t>(&v)) {
                    out_ += std::to_string(*n);
                } else {
                    string(std::get<std::string>(v));
                }
            }
            close('}');
        }
        close('}');
    }

    void open(char bracket) {
        out_ += bracket;
        ++depth_;
        first_ = true;
    }

    void close(char bracket) {
        --depth_;
        newline();
        out_ += bracket;
        first_ = false;
    }

    void element() {
        if (!first_) out_ += ',';
        first_ = false;
        newline();
    }

    void key(std::string_view k) {
        element();
        string(k);
        out_ += ": ";
    }

    void newline() {
        out_ += '\n';
        out_.append(static_cast<std::size_t>(depth_) * 2, ' ');
    }

    void string(std::string_view s) {
        static constexpr char hex[] = "0123456789abcdef";
        out_ += '"';
        std::size_t pos = 0;
        while (pos < s.size()) {
            const char32_t cp = text::next_code_point(s, pos);
            switch (cp) {
                case '"': out_ += "\\\""; break;
                case '\\': out_ += "\\\\"; break;
                case '\b': out_ += "\\b"; break;
                case '\f': out_ += "\\f"; break;
                case '\n': out_ += "\\n"; break;
                case '\r': out_ += "\\r"; break;
                case '\t': out_ += "\\t"; break;
                default:
                    if (cp < 0x20) {
                        out_ += "\\u00";
                        out_ += hex[cp >> 4];
                        out_ += hex[cp & 0xF];
                    } else {
                        text::append_utf8(out_, cp);
                    }
            }
        }
        out_ += '"';
    }

    std::string out_;
    int depth_ = 0;
    bool first_ = true;
};

}  // namespace detail

// Parses a UTF-8 form document. Throws ParseError; never anything else for
// any input bytes.
inline FormDocument parse_form(std::string_view bytes) {
    using detail::json;

    json root;
    try {
        detail::DuplicateKeyGuard guard;
        root = json::parse(bytes.begin(), bytes.end(), std::ref(guard));
    } catch (const detail::DuplicateKeyFound& dup) {
        throw ParseError(ParseErrorKind::Schema, dup.path, "duplicate key");
    } catch (const json::parse_error& e) {
        auto [line, column] = detail::line_column(bytes, e.byte > 0 ? e.byte - 1 : 0);
        std::string what = e.what();
        if (auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
        if (what.starts_with("parse error")) {
            if (auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
        }
        throw ParseError(ParseErrorKind::Syntax, "", what, line, column);
    } catch (const json::exception& e) {
        throw ParseError(ParseErrorKind::Syntax, "", e.what());
    }

    if (!root.is_object()) detail::schema_error("", "document must be a JSON object");
    if (!root.contains("athos_version")) detail::schema_error("athos_version", "missing required key 'athos_version'");
    const auto version = detail::get_int64(root["athos_version"], "athos_version");
    if (version != current_format_version) {
        throw ParseError(ParseErrorKind::Version, "athos_version",
                         "unsupported format version " + std::to_string(version) + " (expected " +
                             std::to_string(current_format_version) + ")");
    }
    detail::expect_object(root, "", {"athos_version", "form"}, {});

    FormDocument doc;
    doc.athos_version = static_cast<int>(version);
    doc.form = detail::read_form(root["form"], "form");
    return doc;
}

inline std::string serialize_form(const FormDocument& doc) {
    detail::CanonicalWriter w;
    w.document(doc);
    return w.take();
}

}  // namespace athos
