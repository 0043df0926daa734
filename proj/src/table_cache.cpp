#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hookdec/characters.hpp"

// Persistent character table cache: one JSON file per degree, guarded by
// a version field and an FNV-1a checksum over the numeric payload.  Any
// read problem, version drift, or checksum mismatch is treated as a
// cache miss; writes are best effort.

namespace hookdec::sn {

namespace {

constexpr int kCacheFormatVersion = 1;

std::string payload_string(int n, const CharacterTable& table) {
    std::ostringstream out;
    out << kCacheFormatVersion << '|' << n << '|';
    for (const Int size : table.class_sizes) out << size << ',';
    out << '|';
    for (const ClassFunction& row : table.rows) {
        for (const Int v : row.values()) out << v << ',';
        out << ';';
    }
    return out.str();
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::filesystem::path table_path(const std::string& dir, int n) {
    return std::filesystem::path(dir) / ("sn-characters-v1-n" + std::to_string(n) + ".json");
}

} // namespace

std::optional<CharacterTable> load_cached_table(const std::string& dir, int n) {
    std::ifstream in(table_path(dir, n));
    if (!in) return std::nullopt;
    nlohmann::json doc;
    try {
        in >> doc;
        if (doc.at("version").get<int>() != kCacheFormatVersion) return std::nullopt;
        if (doc.at("n").get<int>() != n) return std::nullopt;

        CharacterTable table;
        table.n = n;
        table.classes = partitions_of(n);
        table.class_sizes = doc.at("class_sizes").get<std::vector<Int>>();
        if (table.class_sizes.size() != table.classes.size()) return std::nullopt;
        for (const auto& row : doc.at("rows")) {
            std::vector<Int> values = row.get<std::vector<Int>>();
            if (values.size() != table.classes.size()) return std::nullopt;
            table.rows.emplace_back(n, std::move(values));
        }
        if (table.rows.size() != table.classes.size()) return std::nullopt;
        if (doc.at("checksum").get<std::string>() != fnv1a_hex(payload_string(n, table)))
            return std::nullopt;
        return table;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

bool store_cached_table(const std::string& dir, const CharacterTable& table) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return false;

    nlohmann::json doc;
    doc["version"] = kCacheFormatVersion;
    doc["n"] = table.n;
    std::vector<std::string> classes;
    for (const Partition& rho : table.classes) classes.push_back(format_partition(rho));
    doc["classes"] = classes;
    doc["class_sizes"] = table.class_sizes;
    nlohmann::json rows = nlohmann::json::array();
    for (const ClassFunction& row : table.rows) rows.push_back(row.values());
    doc["rows"] = rows;
    doc["checksum"] = fnv1a_hex(payload_string(table.n, table));

    std::ofstream out(table_path(dir, table.n));
    if (!out) return false;
    out << doc.dump() << '\n';
    return static_cast<bool>(out);
}

} // namespace hookdec::sn
