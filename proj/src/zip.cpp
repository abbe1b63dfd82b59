#include "rsciex/zip.hpp"

#include <zlib.h>

namespace rsciex::zip {

namespace {

constexpr std::uint32_t kLocalHeaderSig = 0x04034b50;
constexpr std::uint32_t kCentralHeaderSig = 0x02014b50;
constexpr std::uint32_t kEndOfCentralDirSig = 0x06054b50;
constexpr std::uint16_t kVersion = 20;
constexpr std::uint16_t kFlagUtf8 = 1u << 11;
constexpr std::uint16_t kMethodStored = 0;
constexpr std::uint16_t kMethodDeflated = 8;
constexpr int kDeflateLevel = 6; // fixed: output bytes must not depend on call context

void put16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    put16(out, static_cast<std::uint16_t>(v & 0xffff));
    put16(out, static_cast<std::uint16_t>(v >> 16));
}

std::uint32_t compute_crc(const std::vector<std::uint8_t>& data) {
    return static_cast<std::uint32_t>(
        ::crc32(0L, data.empty() ? Z_NULL : data.data(), static_cast<uInt>(data.size())));
}

std::vector<std::uint8_t> deflate_raw(const std::vector<std::uint8_t>& data) {
    z_stream stream{};
    if (deflateInit2(&stream, kDeflateLevel, Z_DEFLATED, -MAX_WBITS, 8, Z_DEFAULT_STRATEGY)
        != Z_OK)
        throw Error(ErrorCode::IoError, "deflate initialization failed");

    std::vector<std::uint8_t> out(deflateBound(&stream, static_cast<uLong>(data.size())));
    stream.next_in = const_cast<Bytef*>(data.data());
    stream.avail_in = static_cast<uInt>(data.size());
    stream.next_out = out.data();
    stream.avail_out = static_cast<uInt>(out.size());
    const int rc = deflate(&stream, Z_FINISH);
    deflateEnd(&stream);
    if (rc != Z_STREAM_END) throw Error(ErrorCode::IoError, "deflate failed");
    out.resize(out.size() - stream.avail_out);
    return out;
}

std::vector<std::uint8_t> inflate_raw(const std::uint8_t* data, std::size_t size,
                                      std::size_t expected) {
    z_stream stream{};
    if (inflateInit2(&stream, -MAX_WBITS) != Z_OK)
        throw Error(ErrorCode::ParseError, "inflate initialization failed");

    std::vector<std::uint8_t> out(expected);
    std::uint8_t scratch = 0; // zlib needs a real buffer even for empty output
    stream.next_in = const_cast<Bytef*>(data);
    stream.avail_in = static_cast<uInt>(size);
    stream.next_out = expected != 0 ? out.data() : &scratch;
    stream.avail_out = expected != 0 ? static_cast<uInt>(expected) : 1;
    const int rc = inflate(&stream, Z_FINISH);
    inflateEnd(&stream);
    if (rc != Z_STREAM_END || stream.total_out != expected)
        throw Error(ErrorCode::ParseError, "corrupt deflate stream in archive");
    return out;
}

class ByteReader {
public:
    ByteReader(const std::vector<std::uint8_t>& bytes, std::size_t pos)
        : bytes_(bytes), pos_(pos) {}

    std::uint16_t get16() {
        need(2);
        const auto v = static_cast<std::uint16_t>(bytes_[pos_] | (bytes_[pos_ + 1] << 8));
        pos_ += 2;
        return v;
    }
    std::uint32_t get32() {
        const std::uint32_t low = get16();
        const std::uint32_t high = get16();
        return low | (high << 16);
    }
    std::string get_string(std::size_t n) {
        need(n);
        std::string s(reinterpret_cast<const char*>(bytes_.data() + pos_), n);
        pos_ += n;
        return s;
    }
    void skip(std::size_t n) {
        need(n);
        pos_ += n;
    }
    std::size_t position() const { return pos_; }
    const std::uint8_t* cursor() const { return bytes_.data() + pos_; }

    void need(std::size_t n) const {
        if (pos_ + n > bytes_.size())
            throw Error(ErrorCode::ParseError, "truncated zip archive");
    }

private:
    const std::vector<std::uint8_t>& bytes_;
    std::size_t pos_;
};

std::size_t find_end_of_central_dir(const std::vector<std::uint8_t>& bytes) {
    // The record is 22 bytes plus a comment of up to 64K; scan backwards.
    if (bytes.size() < 22) throw Error(ErrorCode::ParseError, "too short to be a zip archive");
    const std::size_t lowest = bytes.size() > 22 + 0xffff ? bytes.size() - 22 - 0xffff : 0;
    for (std::size_t pos = bytes.size() - 22 + 1; pos-- > lowest;) {
        if (bytes[pos] == 0x50 && bytes[pos + 1] == 0x4b && bytes[pos + 2] == 0x05
            && bytes[pos + 3] == 0x06)
            return pos;
    }
    throw Error(ErrorCode::ParseError, "end of central directory not found");
}

} // namespace

DosTimestamp dos_midnight(int year, unsigned month, unsigned day) {
    if (year < 1980) {
        year = 1980;
        month = 1;
        day = 1;
    }
    DosTimestamp stamp;
    stamp.date = static_cast<std::uint16_t>(((year - 1980) << 9) | (month << 5) | day);
    stamp.time = 0;
    return stamp;
}

std::vector<std::uint8_t> write_archive(const std::vector<Entry>& entries, DosTimestamp stamp) {
    if (entries.size() > 0xffff)
        throw Error(ErrorCode::IoError, "too many entries for a plain zip");
    std::vector<std::uint8_t> out;
    struct CentralRecord {
        const Entry* entry;
        std::uint32_t crc;
        std::uint32_t compressed_size;
        std::uint32_t offset;
    };
    std::vector<CentralRecord> records;
    records.reserve(entries.size());

    for (const auto& entry : entries) {
        if (out.size() >= 0xffffffffUL || entry.bytes.size() >= 0xffffffffUL)
            throw Error(ErrorCode::IoError, "archive exceeds the 4 GiB zip limit");
        const auto offset = static_cast<std::uint32_t>(out.size());
        const auto crc = compute_crc(entry.bytes);
        auto compressed = deflate_raw(entry.bytes);

        put32(out, kLocalHeaderSig);
        put16(out, kVersion);
        put16(out, kFlagUtf8);
        put16(out, kMethodDeflated);
        put16(out, stamp.time);
        put16(out, stamp.date);
        put32(out, crc);
        put32(out, static_cast<std::uint32_t>(compressed.size()));
        put32(out, static_cast<std::uint32_t>(entry.bytes.size()));
        put16(out, static_cast<std::uint16_t>(entry.name.size()));
        put16(out, 0); // extra field
        out.insert(out.end(), entry.name.begin(), entry.name.end());
        out.insert(out.end(), compressed.begin(), compressed.end());

        records.push_back({&entry, crc, static_cast<std::uint32_t>(compressed.size()), offset});
    }

    const auto central_offset = static_cast<std::uint32_t>(out.size());
    for (const auto& record : records) {
        put32(out, kCentralHeaderSig);
        put16(out, kVersion); // made by
        put16(out, kVersion); // needed to extract
        put16(out, kFlagUtf8);
        put16(out, kMethodDeflated);
        put16(out, stamp.time);
        put16(out, stamp.date);
        put32(out, record.crc);
        put32(out, record.compressed_size);
        put32(out, static_cast<std::uint32_t>(record.entry->bytes.size()));
        put16(out, static_cast<std::uint16_t>(record.entry->name.size()));
        put16(out, 0); // extra field
        put16(out, 0); // comment
        put16(out, 0); // disk number
        put16(out, 0); // internal attributes
        put32(out, 0); // external attributes
        put32(out, record.offset);
        out.insert(out.end(), record.entry->name.begin(), record.entry->name.end());
    }
    const auto central_size = static_cast<std::uint32_t>(out.size()) - central_offset;

    put32(out, kEndOfCentralDirSig);
    put16(out, 0); // this disk
    put16(out, 0); // central dir disk
    put16(out, static_cast<std::uint16_t>(records.size()));
    put16(out, static_cast<std::uint16_t>(records.size()));
    put32(out, central_size);
    put32(out, central_offset);
    put16(out, 0); // comment length
    return out;
}

std::vector<Entry> read_archive(const std::vector<std::uint8_t>& bytes) {
    const auto eocd_pos = find_end_of_central_dir(bytes);
    ByteReader eocd(bytes, eocd_pos + 4);
    eocd.skip(2 + 2 + 2);
    const std::uint16_t entry_count = eocd.get16();
    eocd.skip(4);
    const std::uint32_t central_offset = eocd.get32();

    std::vector<Entry> entries;
    entries.reserve(entry_count);
    ByteReader central(bytes, central_offset);
    for (std::uint16_t i = 0; i < entry_count; ++i) {
        if (central.get32() != kCentralHeaderSig)
            throw Error(ErrorCode::ParseError, "bad central directory signature");
        central.skip(2 + 2 + 2);
        const std::uint16_t method = central.get16();
        central.skip(2 + 2);
        const std::uint32_t crc = central.get32();
        const std::uint32_t compressed_size = central.get32();
        const std::uint32_t uncompressed_size = central.get32();
        const std::uint16_t name_len = central.get16();
        const std::uint16_t extra_len = central.get16();
        const std::uint16_t comment_len = central.get16();
        central.skip(2 + 2 + 4);
        const std::uint32_t local_offset = central.get32();
        std::string name = central.get_string(name_len);
        central.skip(static_cast<std::size_t>(extra_len) + comment_len);

        ByteReader local(bytes, local_offset);
        if (local.get32() != kLocalHeaderSig)
            throw Error(ErrorCode::ParseError, "bad local header signature for " + name);
        local.skip(2 + 2 + 2 + 2 + 2 + 4 + 4 + 4);
        const std::uint16_t local_name_len = local.get16();
        const std::uint16_t local_extra_len = local.get16();
        local.skip(static_cast<std::size_t>(local_name_len) + local_extra_len);
        local.need(compressed_size);

        Entry entry;
        entry.name = std::move(name);
        if (method == kMethodDeflated)
            entry.bytes = inflate_raw(local.cursor(), compressed_size, uncompressed_size);
        else if (method == kMethodStored)
            entry.bytes.assign(local.cursor(), local.cursor() + compressed_size);
        else
            throw Error(ErrorCode::ParseError,
                        "unsupported compression method " + std::to_string(method));

        if (compute_crc(entry.bytes) != crc)
            throw Error(ErrorCode::ParseError, "CRC mismatch for " + entry.name);
        entries.push_back(std::move(entry));
    }
    return entries;
}

} // namespace rsciex::zip
