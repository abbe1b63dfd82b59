#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsciex/errors.hpp"

namespace rsciex::zip {

struct Entry {
    std::string name;
    std::vector<std::uint8_t> bytes;

    bool operator==(const Entry&) const = default;
};

/// MS-DOS date/time pair as stored in zip headers (2-second resolution).
struct DosTimestamp {
    std::uint16_t date = 0;
    std::uint16_t time = 0;
};

/// Midnight of the given day; years before the DOS epoch clamp to 1980-01-01.
DosTimestamp dos_midnight(int year, unsigned month, unsigned day);

/// Builds a PKZIP archive. Every entry is deflated at a fixed level and
/// stamped with the same timestamp, so the output is a pure function of
/// (entries, stamp). No zip64; total size must stay below 4 GiB.
std::vector<std::uint8_t> write_archive(const std::vector<Entry>& entries, DosTimestamp stamp);

/// Reads an archive produced by write_archive or any ordinary zip tool
/// (stored and deflated entries, no zip64). Entries come back in central
/// directory order with CRCs verified. Throws PARSE_ERROR on damage.
std::vector<Entry> read_archive(const std::vector<std::uint8_t>& bytes);

} // namespace rsciex::zip
