#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "athos/form_io.hpp"
#include "athos/keywords.hpp"
#include "athos/model.hpp"
#include "athos/registry.hpp"

// Random form generators shared by the unit and acceptance suites.
namespace athos::testing {

class FormGen {
public:
    explicit FormGen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
    }

    // Text drawn from a pool heavy in characters that need escaping somewhere:
    // JSON, C# literals, XML, comments.
    std::string text(int max_len = 12) {
        static const std::vector<std::string> pool = {
            "a", "B", "z", "0", "7", " ", " ", "_", "-", ".", ",", ":", "\"", "\\", "'", "/", "{", "}", "(", ")",
            "[", "]", "<", ">", "&", ";", "\n", "\r", "\r\n", "\t", "\x01", "\x1f", "\x7f", "é", "ß", "ü", "✓",
            "—", "日本", "😀", "\xc2\x85", "\xe2\x80\xa8", "\xe2\x80\xa9", "\xef\xbf\xbe", "//", "*/", "/*", "#"};
        std::string s;
        const int n = uniform(0, max_len);
        for (int i = 0; i < n; ++i) s += pick(pool);
        return s;
    }

    std::string identifier() {
        static const std::string first = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_";
        static const std::string rest = first + "0123456789";
        std::string s(1, first[static_cast<std::size_t>(uniform(0, static_cast<int>(first.size()) - 1))]);
        const int n = uniform(0, 10);
        for (int i = 0; i < n; ++i) s += rest[static_cast<std::size_t>(uniform(0, static_cast<int>(rest.size()) - 1))];
        return s;
    }

    std::string color() {
        static const char hex[] = "0123456789ABCDEF";
        std::string s = "#";
        for (int i = 0; i < 6; ++i) s += hex[uniform(0, 15)];
        return s;
    }

    FontSpec font() {
        FontSpec f;
        if (chance(0.5)) return f;
        static const std::vector<std::string> families = {"Microsoft Sans Serif", "Segoe UI", "Arial", "Courier New",
                                                          "Tahoma \"Bold\" <x> & y"};
        f.family = pick(families);
        static const std::vector<double> odd_sizes = {7.1, 10.333, 11.05, 0.5, 72, 100.125};
        f.size_pt = chance(0.8) ? uniform(1, 96) * 0.25 : pick(odd_sizes);
        f.color = color();
        f.bold = chance(0.5);
        f.italic = chance(0.5);
        return f;
    }

    ExtraValue extra_value(ScalarType t) {
        switch (t) {
            case ScalarType::Bool: return chance(0.5);
            case ScalarType::Integer: return static_cast<std::int64_t>(uniform(-100000, 100000));
            case ScalarType::String: return text(8);
            case ScalarType::Color: return color();
        }
        return false;
    }

    // A form with no Error-severity findings under reg (warnings allowed).
    FormSpec valid_form(const ControlKindRegistry& reg, int max_controls = 8) {
        FormSpec f;
        f.name = fresh_name({});
        f.title = text(16);
        f.width = uniform(1, 1200);
        f.height = uniform(1, 900);
        std::set<std::string> used{f.name};
        std::vector<const ControlKindDef*> kinds;
        for (const auto& k : reg) kinds.push_back(&k);
        const int n = uniform(0, max_controls);
        for (int i = 0; i < n; ++i) {
            const ControlKindDef& kind = *pick(kinds);
            ControlSpec c;
            c.name = fresh_name(used);
            used.insert(c.name);
            c.kind = kind.kind_id;
            c.text = text();
            c.x = uniform(-20, f.width + 20);
            c.y = uniform(-20, f.height + 20);
            c.width = uniform(1, 300);
            c.height = uniform(1, 120);
            c.font = font();
            if (chance(0.4)) c.comment = chance(0.1) ? std::string() : text(30);
            for (const auto& prop : kind.extra_schema) {
                if (chance(0.6)) c.extra.emplace(prop.name, extra_value(prop.type));
            }
            f.controls.push_back(std::move(c));
        }
        return f;
    }

    FormDocument valid_document(const ControlKindRegistry& reg) { return FormDocument{1, valid_form(reg)}; }

    // Forms built from a tiny name pool with loose geometry, so duplicate names,
    // bad identifiers and out-of-bounds controls are frequent.
    FormSpec messy_form() {
        static const std::vector<std::string> names = {"a", "b", "c", "F", "button1", "class", "9x", "a b", ""};
        static const std::vector<std::string> kinds = {"label", "textbox", "button", "slider"};
        FormSpec f;
        f.name = chance(0.8) ? "F" : pick(names);
        f.title = "t";
        f.width = uniform(-2, 200);
        f.height = uniform(-2, 200);
        const int n = uniform(0, 7);
        for (int i = 0; i < n; ++i) {
            ControlSpec c;
            c.name = pick(names);
            c.kind = pick(kinds);
            c.x = uniform(-30, 220);
            c.y = uniform(-30, 220);
            c.width = uniform(-2, 120);
            c.height = uniform(-2, 120);
            f.controls.push_back(std::move(c));
        }
        return f;
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::string fresh_name(const std::set<std::string>& used) {
        while (true) {
            std::string s = identifier();
            if (!is_reserved_name(s) && !used.contains(s)) return s;
        }
    }

    std::mt19937_64 rng_;
};

// Byte-level mutations of a seed document for parser fuzzing.
inline std::string mutate(std::string s, std::mt19937_64& rng) {
    auto uni = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    static const std::vector<std::string> tokens = {"{", "}", "[", "]", "\"", ":", ",", "null", "true", "1e999", "-0",
                                                    "\\u0000", "\\ud800", "\xff", "\xc3", "18446744073709551616",
                                                    "\"athos_version\": 2", "{\"a\":1,\"a\":2}", "0.5", "\n"};
    const std::size_t rounds = uni(1, 6);
    for (std::size_t r = 0; r < rounds; ++r) {
        const std::size_t pos = s.empty() ? 0 : uni(0, s.size() - 1);
        switch (uni(0, 5)) {
            case 0:
                if (!s.empty()) s[pos] = static_cast<char>(s[pos] ^ (1 << uni(0, 7)));
                break;
            case 1:
                if (!s.empty()) s.erase(pos, uni(1, 16));
                break;
            case 2: s.insert(pos, 1, static_cast<char>(uni(0, 255))); break;
            case 3: s.insert(pos, tokens[uni(0, tokens.size() - 1)]); break;
            case 4: s.resize(pos); break;
            default: {
                if (s.size() > 2) {
                    const std::size_t a = uni(0, s.size() - 1);
                    const std::size_t len = uni(1, std::min<std::size_t>(64, s.size() - a));
                    s.insert(pos, s.substr(a, len));
                }
            }
        }
    }
    return s;
}

}  // namespace athos::testing
