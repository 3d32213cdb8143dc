#pragma once

#include <string>
#include <string_view>
#include <tuple>

namespace athos {

enum class Severity { Error, Warning };

inline std::string_view severity_name(Severity s) {
    return s == Severity::Error ? "ERROR" : "WARNING";
}

// Closed set of finding codes produced by validate().
namespace codes {
inline constexpr std::string_view bad_ident = "E_BAD_IDENT";
inline constexpr std::string_view reserved_word = "E_RESERVED_WORD";
inline constexpr std::string_view dup_name = "E_DUP_NAME";
inline constexpr std::string_view unknown_kind = "E_UNKNOWN_KIND";
inline constexpr std::string_view bad_extra = "E_BAD_EXTRA";
inline constexpr std::string_view bad_color = "E_BAD_COLOR";
inline constexpr std::string_view nonpositive_size = "E_NONPOSITIVE_SIZE";
inline constexpr std::string_view out_of_bounds = "W_OUT_OF_BOUNDS";
inline constexpr std::string_view overlap = "W_OVERLAP";
}  // namespace codes

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string path;  // slash-separated locator, e.g. "controls/2/name"
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// "ERROR E_DUP_NAME controls/1/name: ..."
inline std::string format_diagnostic(const Diagnostic& d) {
    std::string out{severity_name(d.severity)};
    out += ' ';
    out += d.code;
    out += ' ';
    out += d.path;
    out += ": ";
    out += d.message;
    return out;
}

}  // namespace athos
