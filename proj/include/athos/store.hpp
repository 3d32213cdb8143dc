#pragma once

#include <sys/stat.h>

#include <algorithm>
#include <atomic>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "athos/error.hpp"
#include "athos/form_io.hpp"
#include "athos/registry.hpp"
#include "athos/validate.hpp"

namespace athos {

class NotFound : public Error {
public:
    explicit NotFound(std::string id) : Error("no stored form with id '" + id + "'"), id_(std::move(id)) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

struct StoredFormInfo {
    std::string id;
    std::string name;
    std::string updated_at;  // UTC, ISO 8601 ("2026-10-15T09:30:00Z")
};

inline bool is_form_id(std::string_view id) {
    return id.size() == 12 && std::all_of(id.begin(), id.end(), [](char c) {
               return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
           });
}

// One canonical `<id>.athos.json` file per form in a flat directory. Writes go
// to a temporary file that is renamed over the target, so readers only ever
// see a complete document. Writes to the same id are serialized; different
// ids proceed concurrently.
class FormStore {
public:
    explicit FormStore(std::filesystem::path dir, ControlKindRegistry reg = default_registry())
        : dir_(std::move(dir)), reg_(std::move(reg)) {
        std::filesystem::create_directories(dir_);
    }

    const std::filesystem::path& dir() const { return dir_; }
    const ControlKindRegistry& registry() const { return reg_; }

    // Stores doc under a fresh id and returns it.
    std::string create(const FormDocument& doc) {
        require_valid(doc.form, reg_);
        const std::string bytes = serialize_form(doc);
        while (true) {
            std::string id = new_id();
            auto lock = lock_id(id);
            if (std::filesystem::exists(path_for(id))) continue;
            write_atomic(id, bytes);
            return id;
        }
    }

    // Writes doc under id. With must_exist, a missing id raises NotFound.
    void put(const std::string& id, const FormDocument& doc, bool must_exist = false) {
        if (!is_form_id(id)) throw NotFound(id);
        require_valid(doc.form, reg_);
        const std::string bytes = serialize_form(doc);
        auto lock = lock_id(id);
        if (must_exist && !std::filesystem::exists(path_for(id))) throw NotFound(id);
        write_atomic(id, bytes);
    }

    bool exists(const std::string& id) const {
        return is_form_id(id) && std::filesystem::exists(path_for(id));
    }

    std::string get_bytes(const std::string& id) const {
        if (!is_form_id(id)) throw NotFound(id);
        std::ifstream in(path_for(id), std::ios::binary);
        if (!in) throw NotFound(id);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    FormDocument get(const std::string& id) const {
        return parse_form(get_bytes(id));
    }

    std::vector<StoredFormInfo> list() const {
        std::vector<StoredFormInfo> out;
        for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
            const std::string file = entry.path().filename().string();
            if (file.size() != 12 + document_extension.size() || !file.ends_with(document_extension)) continue;
            const std::string id = file.substr(0, 12);
            if (!is_form_id(id)) continue;
            try {
                out.push_back({id, get(id).form.name, updated_at(entry.path())});
            } catch (const Error&) {
                // deleted or replaced by a foreign file between listing and reading
            }
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
        return out;
    }

    void remove(const std::string& id) {
        if (!is_form_id(id)) throw NotFound(id);
        auto lock = lock_id(id);
        if (!std::filesystem::remove(path_for(id))) throw NotFound(id);
    }

    std::filesystem::path path_for(const std::string& id) const {
        return dir_ / (id + std::string(document_extension));
    }

private:
    std::unique_lock<std::mutex> lock_id(const std::string& id) {
        std::shared_ptr<std::mutex> m;
        {
            std::lock_guard guard(locks_mutex_);
            auto& slot = locks_[id];
            if (!slot) slot = std::make_shared<std::mutex>();
            m = slot;
        }
        return std::unique_lock<std::mutex>(*m);
    }

    std::string new_id() {
        std::lock_guard guard(rng_mutex_);
        static constexpr char hex[] = "0123456789abcdef";
        std::string id(12, '0');
        for (auto& c : id) c = hex[rng_() & 0xF];
        return id;
    }

    void write_atomic(const std::string& id, const std::string& bytes) {
        const auto target = path_for(id);
        const auto tmp = dir_ / ("." + id + "." + std::to_string(++tmp_counter_) + ".tmp");
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
            out.close();
            if (!out) {
                std::error_code ec;
                std::filesystem::remove(tmp, ec);
                throw Error("failed to write '" + tmp.string() + "'");
            }
        }
        std::filesystem::rename(tmp, target);
    }

    static std::string updated_at(const std::filesystem::path& p) {
        struct stat st {};
        if (::stat(p.c_str(), &st) != 0) return {};
        std::tm tm{};
        gmtime_r(&st.st_mtime, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        return buf;
    }

    std::filesystem::path dir_;
    ControlKindRegistry reg_;
    std::mutex locks_mutex_;
    std::map<std::string, std::shared_ptr<std::mutex>> locks_;
    std::mutex rng_mutex_;
    std::mt19937_64 rng_{std::random_device{}()};
    std::atomic<std::uint64_t> tmp_counter_{0};
};

}  // namespace athos
