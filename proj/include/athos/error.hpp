#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "athos/diagnostic.hpp"

namespace athos {

// Base of every error raised by the library. Parse failures use ParseError
// (see form_io.hpp), which also derives from this.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownKind : public Error {
public:
    explicit UnknownKind(std::string kind_id)
        : Error("unknown control kind '" + kind_id + "'"), kind_id_(std::move(kind_id)) {}
    const std::string& kind_id() const noexcept { return kind_id_; }

private:
    std::string kind_id_;
};

class DuplicateKind : public Error {
public:
    explicit DuplicateKind(std::string kind_id)
        : Error("control kind '" + kind_id + "' is already registered"), kind_id_(std::move(kind_id)) {}
    const std::string& kind_id() const noexcept { return kind_id_; }

private:
    std::string kind_id_;
};

class InvalidKindDef : public Error {
public:
    using Error::Error;
};

class UnknownControl : public Error {
public:
    explicit UnknownControl(std::string name)
        : Error("no control named '" + name + "'"), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// A value rejected by an edit operation; path locates the offending field.
class InvalidValue : public Error {
public:
    InvalidValue(std::string path, const std::string& why)
        : Error("invalid value at '" + path + "': " + why), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class ValidationFailed : public Error {
public:
    explicit ValidationFailed(std::vector<Diagnostic> diagnostics)
        : Error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    static std::string summarize(const std::vector<Diagnostic>& diags) {
        std::size_t errors = 0;
        for (const auto& d : diags) {
            if (d.severity == Severity::Error) ++errors;
        }
        return "form has " + std::to_string(errors) + " validation error(s)";
    }

    std::vector<Diagnostic> diagnostics_;
};

class BadImage : public Error {
public:
    using Error::Error;
};

}  // namespace athos
