#pragma once

#include <stdexcept>
#include <string>

namespace hookdec {

enum class errc {
    size_mismatch,
    non_distinct_parts,
    index_out_of_range,
    odd_size,
    resource_limit,
    overflow,
    parse,
};

constexpr const char* errc_name(errc c) {
    switch (c) {
    case errc::size_mismatch: return "SizeMismatch";
    case errc::non_distinct_parts: return "NonDistinctParts";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::odd_size: return "OddSize";
    case errc::resource_limit: return "ResourceLimit";
    case errc::overflow: return "Overflow";
    case errc::parse: return "Parse";
    }
    return "Unknown";
}

/// Domain error carrying one of the contract error codes above.  The
/// what() string always starts with the code name so callers (and the
/// CLI) can surface which constraint was violated.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
    throw Error(code, detail);
}

} // namespace hookdec
