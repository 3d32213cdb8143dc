#pragma once

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <httplib.h>
#include <json.hpp>

#include "athos/codegen_cs.hpp"
#include "athos/error.hpp"
#include "athos/export_docx.hpp"
#include "athos/form_io.hpp"
#include "athos/render_svg.hpp"
#include "athos/store.hpp"
#include "athos/validate.hpp"

namespace athos {

inline constexpr int default_port = 8553;
inline constexpr std::string_view default_data_dir = "./athos-data";
inline constexpr std::string_view server_config_file = "server.json";

struct ServerConfig {
    std::filesystem::path data_dir{std::string(default_data_dir)};
    int port = default_port;
    std::string host = "127.0.0.1";
    // Shell command turning an SVG into a PNG; "{svg}" and "{png}" are
    // replaced by quoted file paths. Enables image embedding in DOCX exports.
    std::optional<std::string> rasterizer;
    // Directory holding the built designer UI, served at "/".
    std::optional<std::filesystem::path> ui_dir;
};

// Reads `<data_dir>/server.json` ({"rasterizer": "...", "ui_dir": "..."}) when
// present and fills the fields not already set.
inline void load_server_config(ServerConfig& cfg) {
    const auto file = cfg.data_dir / std::string(server_config_file);
    std::ifstream in(file);
    if (!in) return;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error("cannot read '" + file.string() + "': " + e.what());
    }
    if (!j.is_object()) throw Error("'" + file.string() + "' must hold a JSON object");
    if (!cfg.rasterizer && j.contains("rasterizer") && j["rasterizer"].is_string()) {
        cfg.rasterizer = j["rasterizer"].get<std::string>();
    }
    if (!cfg.ui_dir && j.contains("ui_dir") && j["ui_dir"].is_string()) {
        cfg.ui_dir = std::filesystem::path(j["ui_dir"].get<std::string>());
    }
}

inline nlohmann::json diagnostics_json(const std::vector<Diagnostic>& diags) {
    auto arr = nlohmann::json::array();
    for (const auto& d : diags) {
        arr.push_back({{"severity", d.severity == Severity::Error ? "error" : "warning"},
                       {"code", d.code},
                       {"path", d.path},
                       {"message", d.message}});
    }
    return arr;
}

namespace detail {

inline std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') {
            out += "'\\''";
        } else {
            out += c;
        }
    }
    return out + "'";
}

inline void replace_all(std::string& s, std::string_view from, const std::string& to) {
    for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
        s.replace(pos, from.size(), to);
    }
}

inline std::string rasterize(const std::string& command, const std::string& svg_bytes) {
    static std::atomic<unsigned> counter{0};
    const auto base = std::filesystem::temp_directory_path() /
                      ("athos-raster-" + std::to_string(::getpid()) + "-" + std::to_string(++counter));
    const auto svg_path = base.string() + ".svg";
    const auto png_path = base.string() + ".png";
    {
        std::ofstream out(svg_path, std::ios::binary);
        out << svg_bytes;
    }
    std::string cmd = command;
    replace_all(cmd, "{svg}", shell_quote(svg_path));
    replace_all(cmd, "{png}", shell_quote(png_path));
    const int rc = std::system(cmd.c_str());
    std::string png;
    {
        std::ifstream in(png_path, std::ios::binary);
        std::ostringstream ss;
        if (in) ss << in.rdbuf();
        png = ss.str();
    }
    std::error_code ec;
    std::filesystem::remove(svg_path, ec);
    std::filesystem::remove(png_path, ec);
    if (rc != 0 || png.empty()) throw Error("rasterizer command failed");
    return png;
}

}  // namespace detail

// REST front end over a FormStore. Routes:
//   POST   /api/forms                      create (201 {"id"})
//   GET    /api/forms                      list
//   GET    /api/forms/{id}                 canonical document
//   PUT    /api/forms/{id}                 replace
//   DELETE /api/forms/{id}                 remove (204)
//   POST   /api/forms/{id}/validate        all diagnostics
//   GET    /api/forms/{id}/export/csharp   .cs source
//   GET    /api/forms/{id}/export/svg      SVG image
//   GET    /api/forms/{id}/export/docx     Word document (?image=1 with a rasterizer)
class Server {
public:
    explicit Server(ServerConfig cfg) : cfg_(std::move(cfg)), store_(cfg_.data_dir) { install_routes(); }

    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    FormStore& store() { return store_; }
    const ServerConfig& config() const { return cfg_; }

    // Blocks until stop().
    bool listen() { return http_.listen(cfg_.host, cfg_.port); }

    // Binds an ephemeral port and returns it; serve with listen_after_bind().
    int bind_any_port() { return http_.bind_to_any_port(cfg_.host); }
    bool listen_after_bind() { return http_.listen_after_bind(); }
    void wait_until_ready() const { http_.wait_until_ready(); }
    void stop() { http_.stop(); }

private:
    using Request = httplib::Request;
    using Response = httplib::Response;

    static void send_json(Response& res, int status, const nlohmann::json& body) {
        res.status = status;
        res.set_content(body.dump(2) + "\n", "application/json");
    }

    static void send_error(Response& res, int status, std::string_view code, const std::string& message) {
        send_json(res, status, {{"status", status}, {"code", code}, {"message", message}});
    }

    static void send_parse_error(Response& res, const ParseError& e) {
        nlohmann::json body = {{"status", 400},
                               {"code", "BadRequest"},
                               {"message", e.what()},
                               {"parse_error", {{"kind", parse_error_kind_name(e.kind())}, {"path", e.path()}}}};
        if (e.line()) body["parse_error"]["line"] = *e.line();
        if (e.column()) body["parse_error"]["column"] = *e.column();
        send_json(res, 400, body);
    }

    static void send_validation(Response& res, const ValidationFailed& e) {
        send_json(res, 422,
                  {{"status", 422},
                   {"code", "ValidationFailed"},
                   {"message", e.what()},
                   {"diagnostics", diagnostics_json(e.diagnostics())}});
    }

    static void attach(Response& res, const std::string& filename) {
        res.set_header("Content-Disposition", "attachment; filename=\"" + filename + "\"");
    }

    // Runs fn, mapping library errors onto HTTP statuses.
    template <typename Fn>
    static void guarded(Response& res, Fn&& fn) {
        try {
            fn();
        } catch (const ParseError& e) {
            send_parse_error(res, e);
        } catch (const ValidationFailed& e) {
            send_validation(res, e);
        } catch (const NotFound& e) {
            send_error(res, 404, "NotFound", e.what());
        } catch (const std::exception& e) {
            send_error(res, 500, "InternalError", e.what());
        }
    }

    void install_routes() {
        static constexpr const char* id_route = R"(/api/forms/([^/]+))";

        http_.Post("/api/forms", [this](const Request& req, Response& res) {
            guarded(res, [&] {
                const std::string id = store_.create(parse_form(req.body));
                send_json(res, 201, {{"id", id}});
            });
        });

        http_.Get("/api/forms", [this](const Request&, Response& res) {
            guarded(res, [&] {
                auto arr = nlohmann::json::array();
                for (const auto& f : store_.list()) {
                    arr.push_back({{"id", f.id}, {"name", f.name}, {"updated_at", f.updated_at}});
                }
                send_json(res, 200, arr);
            });
        });

        http_.Get(id_route, [this](const Request& req, Response& res) {
            guarded(res, [&] {
                res.status = 200;
                res.set_content(store_.get_bytes(req.matches[1]), "application/json");
            });
        });

        http_.Put(id_route, [this](const Request& req, Response& res) {
            guarded(res, [&] {
                const std::string id = req.matches[1];
                if (!store_.exists(id)) throw NotFound(id);
                store_.put(id, parse_form(req.body), /*must_exist=*/true);
                send_json(res, 200, {{"id", id}});
            });
        });

        http_.Delete(id_route, [this](const Request& req, Response& res) {
            guarded(res, [&] {
                store_.remove(req.matches[1]);
                res.status = 204;
            });
        });

        http_.Post(R"(/api/forms/([^/]+)/validate)", [this](const Request& req, Response& res) {
            guarded(res, [&] {
                const auto doc = store_.get(req.matches[1]);
                send_json(res, 200, {{"diagnostics", diagnostics_json(validate(doc.form, store_.registry()))}});
            });
        });

        http_.Get(R"(/api/forms/([^/]+)/export/csharp)", [this](const Request& req, Response& res) {
            guarded(res, [&] {
                const auto doc = store_.get(req.matches[1]);
                auto src = generate_csharp(doc.form, store_.registry());
                res.status = 200;
                attach(res, src.filename);
                res.set_content(std::move(src.content), "text/plain; charset=utf-8");
            });
        });

        http_.Get(R"(/api/forms/([^/]+)/export/svg)", [this](const Request& req, Response& res) {
            guarded(res, [&] {
                const auto doc = store_.get(req.matches[1]);
                res.status = 200;
                attach(res, doc.form.name + ".svg");
                res.set_content(render_svg(doc.form, store_.registry()), std::string(svg_media_type));
            });
        });

        http_.Get(R"(/api/forms/([^/]+)/export/docx)", [this](const Request& req, Response& res) {
            guarded(res, [&] {
                const auto doc = store_.get(req.matches[1]);
                DocxOptions opts;
                if (cfg_.rasterizer && req.get_param_value("image") == "1") {
                    opts.embed_image = detail::rasterize(*cfg_.rasterizer, render_svg(doc.form, store_.registry()));
                }
                auto pkg = generate_docx(doc.form, store_.registry(), opts);
                res.status = 200;
                attach(res, doc.form.name + ".docx");
                res.set_content(std::move(pkg.bytes), std::string(docx_media_type));
            });
        });

        if (cfg_.ui_dir && std::filesystem::is_directory(*cfg_.ui_dir)) {
            http_.set_mount_point("/", cfg_.ui_dir->string());
        }
    }

    ServerConfig cfg_;
    FormStore store_;
    httplib::Server http_;
};

}  // namespace athos
