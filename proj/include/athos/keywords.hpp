#pragma once

#include <algorithm>
#include <array>
#include <string_view>

namespace athos {

// The C# keyword table (reserved words only; contextual keywords such as
// "var" or "async" are legal identifiers). Sorted for binary search.
inline constexpr std::array<std::string_view, 77> csharp_keywords = {
    "abstract", "as",        "base",     "bool",      "break",     "byte",     "case",
    "catch",    "char",      "checked",  "class",     "const",     "continue", "decimal",
    "default",  "delegate",  "do",       "double",    "else",      "enum",     "event",
    "explicit", "extern",    "false",    "finally",   "fixed",     "float",    "for",
    "foreach",  "goto",      "if",       "implicit",  "in",        "int",      "interface",
    "internal", "is",        "lock",     "long",      "namespace", "new",      "null",
    "object",   "operator",  "out",      "override",  "params",    "private",  "protected",
    "public",   "readonly",  "ref",      "return",    "sbyte",     "sealed",   "short",
    "sizeof",   "stackalloc", "static",  "string",    "struct",    "switch",   "this",
    "throw",    "true",      "try",      "typeof",    "uint",      "ulong",    "unchecked",
    "unsafe",   "ushort",    "using",    "virtual",   "void",      "volatile", "while",
};

static_assert(std::is_sorted(csharp_keywords.begin(), csharp_keywords.end()));

// Identifiers the generated class itself depends on. A field or class with
// one of these names shadows the generated code's references and breaks
// compilation, so they are reserved alongside the keywords.
inline constexpr std::array<std::string_view, 2> generated_code_names = {
    "InitializeComponent",
    "System",
};

inline bool is_csharp_keyword(std::string_view s) {
    return std::binary_search(csharp_keywords.begin(), csharp_keywords.end(), s);
}

inline bool is_reserved_name(std::string_view s) {
    return is_csharp_keyword(s) ||
           std::find(generated_code_names.begin(), generated_code_names.end(), s) !=
               generated_code_names.end();
}

}  // namespace athos
