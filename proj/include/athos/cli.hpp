#pragma once

#include <atomic>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "athos/codegen_cs.hpp"
#include "athos/error.hpp"
#include "athos/export_docx.hpp"
#include "athos/form_io.hpp"
#include "athos/registry.hpp"
#include "athos/render_svg.hpp"
#include "athos/server.hpp"
#include "athos/validate.hpp"

// The `athos` command line: new, validate, gen-cs, render, doc, serve.
// Exit status: 0 success, 1 I/O or parse failure, 2 validation errors.
namespace athos::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_invalid = 2;

namespace detail {

// Reported on stderr and mapped to exit status 1.
struct Fatal {
    std::string message;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Fatal{"cannot read '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw Fatal{"error reading '" + path + "'"};
    return ss.str();
}

// "-" writes to out.
inline void write_file(const std::string& path, std::string_view bytes, std::ostream& out) {
    if (path == "-") {
        out << bytes;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    f.close();
    if (!f) throw Fatal{"cannot write '" + path + "'"};
}

inline std::string describe(const std::string& path, const ParseError& e) {
    std::string out = path;
    if (e.line() && e.column()) out += ":" + std::to_string(*e.line()) + ":" + std::to_string(*e.column());
    out += ": " + std::string(parse_error_kind_name(e.kind())) + " error";
    if (!e.path().empty()) out += " at '" + e.path() + "'";
    return out + ": " + e.message();
}

inline FormDocument load(const std::string& path) {
    const std::string bytes = read_file(path);
    try {
        return parse_form(bytes);
    } catch (const ParseError& e) {
        throw Fatal{describe(path, e)};
    }
}

inline void print_diagnostics(const std::vector<Diagnostic>& diags, std::ostream& out) {
    for (const auto& d : diags) out << format_diagnostic(d) << '\n';
}

inline std::atomic<Server*> running_server{nullptr};

inline void stop_on_signal(int) {
    if (Server* s = running_server.load()) s->stop();
}

}  // namespace detail

// Runs one invocation. Output that is the product of a command (diagnostics,
// "-o -" payloads) goes to out, failures go to err.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"athos: design forms, then generate C# code, SVG mockups and Word documentation", "athos"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "athos 1.0.0");

    std::string new_name;
    std::string output;
    std::string input;
    std::string namespace_name = CodegenOptions{}.namespace_name;
    bool no_comments = false;
    bool no_badges = false;
    std::string image_path;
    int port = default_port;
    std::string data_dir{default_data_dir};

    auto* cmd_new = app.add_subcommand("new", "Create an empty form document");
    cmd_new->add_option("name", new_name, "Form (class) name")->required();
    cmd_new->add_option("-o,--output", output, "Output path (default <name>.athos.json)");

    auto* cmd_validate = app.add_subcommand("validate", "Check a form document and list its diagnostics");
    cmd_validate->add_option("file", input, "Form document")->required();

    auto* cmd_gen = app.add_subcommand("gen-cs", "Generate the C# form class");
    cmd_gen->add_option("file", input, "Form document")->required();
    cmd_gen->add_option("-o,--output", output, "Output path (default <FormName>.cs)");
    cmd_gen->add_option("--namespace", namespace_name, "Namespace of the generated class");
    cmd_gen->add_flag("--no-comments", no_comments, "Leave control comments out of the source");

    auto* cmd_render = app.add_subcommand("render", "Render the form as an SVG image");
    cmd_render->add_option("file", input, "Form document")->required();
    cmd_render->add_option("-o,--output", output, "Output path (default <FormName>.svg)");
    cmd_render->add_flag("--no-badges", no_badges, "Do not draw comment badges");

    auto* cmd_doc = app.add_subcommand("doc", "Build the Word document with properties and comments");
    cmd_doc->add_option("file", input, "Form document")->required();
    cmd_doc->add_option("-o,--output", output, "Output path (default <FormName>.docx)");
    cmd_doc->add_option("--image", image_path, "PNG image of the form to embed");

    auto* cmd_serve = app.add_subcommand("serve", "Run the HTTP API");
    cmd_serve->add_option("--port", port, "Listening port")->capture_default_str();
    cmd_serve->add_option("--data-dir", data_dir, "Directory holding stored forms")
        ->envname("ATHOS_DATA_DIR")
        ->capture_default_str();

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_failure;
    }

    const ControlKindRegistry reg = default_registry();
    try {
        if (cmd_new->parsed()) {
            FormDocument doc;
            doc.form.name = new_name;
            doc.form.title = new_name;
            doc.form.width = 600;
            doc.form.height = 400;
            const auto diags = validate(doc.form, reg);
            if (has_errors(diags)) {
                detail::print_diagnostics(diags, out);
                return exit_invalid;
            }
            detail::write_file(output.empty() ? new_name + std::string(document_extension) : output,
                               serialize_form(doc), out);
            return exit_ok;
        }

        if (cmd_validate->parsed()) {
            const auto doc = detail::load(input);
            const auto diags = validate(doc.form, reg);
            detail::print_diagnostics(diags, out);
            return has_errors(diags) ? exit_invalid : exit_ok;
        }

        if (cmd_serve->parsed()) {
            ServerConfig cfg;
            cfg.port = port;
            cfg.data_dir = data_dir;
            load_server_config(cfg);
            Server server(cfg);
            detail::running_server = &server;
            std::signal(SIGINT, detail::stop_on_signal);
            std::signal(SIGTERM, detail::stop_on_signal);
            err << "athos: serving " << std::filesystem::absolute(cfg.data_dir).string() << " on http://" << cfg.host
                << ":" << cfg.port << std::endl;
            const bool ok = server.listen();
            detail::running_server = nullptr;
            if (!ok) {
                err << "athos: cannot listen on " << cfg.host << ":" << cfg.port << '\n';
                return exit_failure;
            }
            return exit_ok;
        }

        const auto doc = detail::load(input);
        const auto diags = validate(doc.form, reg);
        if (has_errors(diags)) {
            detail::print_diagnostics(diags, out);
            return exit_invalid;
        }

        if (cmd_gen->parsed()) {
            CodegenOptions opts;
            opts.namespace_name = namespace_name;
            opts.emit_comments = !no_comments;
            const auto src = generate_csharp(doc.form, reg, opts);
            detail::write_file(output.empty() ? src.filename : output, src.content, out);
        } else if (cmd_render->parsed()) {
            RenderOptions opts;
            opts.show_badges = !no_badges;
            detail::write_file(output.empty() ? doc.form.name + ".svg" : output, render_svg(doc.form, reg, opts), out);
        } else if (cmd_doc->parsed()) {
            DocxOptions opts;
            if (!image_path.empty()) opts.embed_image = detail::read_file(image_path);
            const auto pkg = generate_docx(doc.form, reg, opts);
            detail::write_file(output.empty() ? doc.form.name + ".docx" : output, pkg.bytes, out);
        }
        return exit_ok;
    } catch (const detail::Fatal& e) {
        err << "athos: " << e.message << '\n';
        return exit_failure;
    } catch (const ValidationFailed& e) {
        detail::print_diagnostics(e.diagnostics(), out);
        return exit_invalid;
    } catch (const Error& e) {
        err << "athos: " << e.what() << '\n';
        return exit_failure;
    } catch (const std::exception& e) {
        err << "athos: " << e.what() << '\n';
        return exit_failure;
    }
}

}  // namespace athos::cli
