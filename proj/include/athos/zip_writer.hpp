#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <zlib.h>

namespace athos::zip {

// Minimal ZIP archive writer: stored (uncompressed) entries, entry order as
// added, every timestamp pinned to the DOS epoch (1980-01-01 00:00:00), so
// equal inputs always produce equal archives.
class Writer {
public:
    void add(std::string_view name, std::string_view data) {
        if (name.size() > 0xFFFF || data.size() > 0xFFFFFFFEu || entries_.size() >= 0xFFFF) {
            throw std::length_error("zip entry too large for a non-zip64 archive");
        }
        Entry e;
        e.name = std::string(name);
        e.crc = static_cast<std::uint32_t>(
            crc32(crc32(0L, Z_NULL, 0), reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size())));
        e.size = static_cast<std::uint32_t>(data.size());
        e.offset = static_cast<std::uint32_t>(out_.size());

        u32(0x04034b50);
        u16(version_needed);
        u16(0);  // flags
        u16(0);  // method: stored
        u16(dos_time);
        u16(dos_date);
        u32(e.crc);
        u32(e.size);
        u32(e.size);
        u16(static_cast<std::uint16_t>(e.name.size()));
        u16(0);
        out_ += e.name;
        out_.append(data);
        entries_.push_back(std::move(e));
    }

    std::string finish() && {
        const auto cd_offset = static_cast<std::uint32_t>(out_.size());
        for (const auto& e : entries_) {
            u32(0x02014b50);
            u16(version_needed);  // made by (MS-DOS)
            u16(version_needed);
            u16(0);
            u16(0);
            u16(dos_time);
            u16(dos_date);
            u32(e.crc);
            u32(e.size);
            u32(e.size);
            u16(static_cast<std::uint16_t>(e.name.size()));
            u16(0);  // extra
            u16(0);  // comment
            u16(0);  // disk
            u16(0);  // internal attrs
            u32(0);  // external attrs
            u32(e.offset);
            out_ += e.name;
        }
        const auto cd_size = static_cast<std::uint32_t>(out_.size() - cd_offset);
        u32(0x06054b50);
        u16(0);
        u16(0);
        u16(static_cast<std::uint16_t>(entries_.size()));
        u16(static_cast<std::uint16_t>(entries_.size()));
        u32(cd_size);
        u32(cd_offset);
        u16(0);
        return std::move(out_);
    }

private:
    static constexpr std::uint16_t version_needed = 10;
    static constexpr std::uint16_t dos_time = 0;
    static constexpr std::uint16_t dos_date = (1 << 5) | 1;  // 1980-01-01

    struct Entry {
        std::string name;
        std::uint32_t crc = 0;
        std::uint32_t size = 0;
        std::uint32_t offset = 0;
    };

    void u16(std::uint16_t v) {
        out_ += static_cast<char>(v & 0xFF);
        out_ += static_cast<char>(v >> 8);
    }

    void u32(std::uint32_t v) {
        u16(static_cast<std::uint16_t>(v & 0xFFFF));
        u16(static_cast<std::uint16_t>(v >> 16));
    }

    std::string out_;
    std::vector<Entry> entries_;
};

}  // namespace athos::zip
