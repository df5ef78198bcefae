#pragma once

/**
 * @file oeis.hpp
 * @brief OEIS b-files: parsing, formatting, lookup and comparison.
 *
 * A b-file is plain text: optional '#' comment lines, then one
 * "index value" pair per line with indices increasing by one. Lookups go
 * through a fixture directory, then a cache directory, then an optional
 * fetch callback supplied by the caller. This header does no networking.
 */

#include "integer.hpp"

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pascalmod::oeis {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when neither a fixture, a cached copy nor a fetch is available.
class OfflineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_valid_id(std::string_view id) {
    if (id.size() != 7 || id[0] != 'A') return false;
    for (char c : id.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

struct BFile {
    std::string id;
    std::vector<std::pair<std::int64_t, BigInt>> entries;

    std::int64_t offset() const { return entries.empty() ? 0 : entries.front().first; }

    std::vector<BigInt> values() const {
        std::vector<BigInt> v;
        v.reserve(entries.size());
        for (const auto& e : entries) v.push_back(e.second);
        return v;
    }
};

namespace detail {
inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline bool is_integer_token(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}
}  // namespace detail

inline BFile parse_bfile(std::string_view text, std::string id) {
    if (!is_valid_id(id)) throw ParseError("invalid OEIS identifier: " + id);
    BFile b{std::move(id), {}};
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = detail::trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        const std::size_t sep = line.find_first_of(" \t");
        if (sep == std::string_view::npos) {
            throw ParseError(b.id + " line " + std::to_string(line_no) + ": expected \"index value\"");
        }
        const std::string_view idx = line.substr(0, sep);
        const std::string_view value = detail::trim(line.substr(sep + 1));
        if (!detail::is_integer_token(idx) || !detail::is_integer_token(value)) {
            throw ParseError(b.id + " line " + std::to_string(line_no) + ": non-integer field");
        }
        const std::int64_t index = std::stoll(std::string(idx));
        if (!b.entries.empty() && index != b.entries.back().first + 1) {
            throw ParseError(b.id + " line " + std::to_string(line_no) + ": index " + std::to_string(index) +
                             " does not follow " + std::to_string(b.entries.back().first));
        }
        b.entries.emplace_back(index, BigInt(std::string(value)));
    }
    return b;
}

inline std::string format_bfile(const BFile& b, std::string_view comment = {}) {
    std::ostringstream os;
    if (!comment.empty()) os << "# " << comment << '\n';
    for (const auto& [i, v] : b.entries) os << i << ' ' << v << '\n';
    return os.str();
}

inline BFile make_bfile(std::string id, std::int64_t offset, const std::vector<BigInt>& values) {
    BFile b{std::move(id), {}};
    for (std::size_t i = 0; i < values.size(); ++i) b.entries.emplace_back(offset + static_cast<std::int64_t>(i), values[i]);
    return b;
}

struct Comparison {
    bool match = false;
    std::size_t compared = 0;
    std::optional<std::int64_t> first_divergent_index;
    std::string message;
};

/// Compares `computed` (first term at index `offset`) with the b-file on the
/// indices both cover.
inline Comparison compare(const BFile& reference, const std::vector<BigInt>& computed, std::int64_t offset) {
    Comparison c;
    for (const auto& [i, v] : reference.entries) {
        const std::int64_t k = i - offset;
        if (k < 0 || k >= static_cast<std::int64_t>(computed.size())) continue;
        ++c.compared;
        if (computed[static_cast<std::size_t>(k)] != v) {
            c.first_divergent_index = i;
            c.message = reference.id + ": a(" + std::to_string(i) + ") expected " + v.str() + ", computed " +
                        computed[static_cast<std::size_t>(k)].str();
            return c;
        }
    }
    if (c.compared == 0) {
        c.message = reference.id + ": no overlapping indices";
        return c;
    }
    c.match = true;
    c.message = reference.id + ": " + std::to_string(c.compared) + " terms match";
    return c;
}

inline std::string bfile_name(std::string_view id) { return "b" + std::string(id.substr(1)) + ".txt"; }

/// Cache directory: $PASCALMOD_OEIS_CACHE, else $XDG_CACHE_HOME/pascalmod/oeis,
/// else ~/.cache/pascalmod/oeis.
inline std::filesystem::path default_cache_dir() {
    if (const char* v = std::getenv("PASCALMOD_OEIS_CACHE"); v && *v) return v;
    if (const char* v = std::getenv("XDG_CACHE_HOME"); v && *v) return std::filesystem::path(v) / "pascalmod" / "oeis";
    if (const char* v = std::getenv("HOME"); v && *v) return std::filesystem::path(v) / ".cache" / "pascalmod" / "oeis";
    return std::filesystem::path(".pascalmod-cache") / "oeis";
}

inline std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Fetches the raw b-file text for an identifier, or nothing.
using Fetcher = std::function<std::optional<std::string>(const std::string& id)>;

struct Source {
    std::optional<std::filesystem::path> fixture_dir;
    std::optional<std::filesystem::path> cache_dir;
    Fetcher fetch;  // empty means offline

    /// Fixture first, then cache, then fetch (the fetched text is cached).
    BFile load(const std::string& id) const {
        if (!is_valid_id(id)) throw ParseError("invalid OEIS identifier: " + id);
        for (const auto& dir : {fixture_dir, cache_dir}) {
            if (!dir) continue;
            if (auto text = read_file(*dir / bfile_name(id))) return parse_bfile(*text, id);
        }
        if (!fetch) throw OfflineError(id + ": offline, no fixture");
        auto text = fetch(id);
        if (!text) throw OfflineError(id + ": fetch failed and no fixture is available");
        BFile b = parse_bfile(*text, id);
        if (cache_dir) {
            std::filesystem::create_directories(*cache_dir);
            std::ofstream out(*cache_dir / bfile_name(id), std::ios::binary);
            out << *text;
        }
        return b;
    }
};

}  // namespace pascalmod::oeis
