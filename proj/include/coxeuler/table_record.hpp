#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "coxeuler/polynomial.hpp"

namespace coxeuler {

// One table row as serialized: coefficients are decimal strings so that no
// coefficient is ever squeezed through a native numeric type.
struct TableRecord {
    std::string family;
    std::string statistic;
    int n = 0;
    std::string source;
    std::vector<std::string> coefficients;

    bool operator==(const TableRecord&) const = default;
};

inline TableRecord make_record(const std::string& family, const std::string& statistic, int n,
                               const std::string& source, const Polynomial& p) {
    return TableRecord{family, statistic, n, source, p.to_decimal_strings()};
}

inline Polynomial record_polynomial(const TableRecord& r) {
    return Polynomial::from_decimal_strings(r.coefficients);
}

// Fixed key order so identical records always serialize to identical bytes.
inline std::string to_json_line(const TableRecord& r) {
    nlohmann::ordered_json j;
    j["family"] = r.family;
    j["statistic"] = r.statistic;
    j["n"] = r.n;
    j["source"] = r.source;
    j["coefficients"] = r.coefficients;
    return j.dump();
}

namespace detail {

inline bool is_decimal_integer(const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace detail

// Parses one serialized record; throws std::invalid_argument with a reason on
// any malformed input (bad JSON is reported by the caller).
inline TableRecord from_json_line(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    if (!j.is_object()) throw std::invalid_argument("record is not an object");
    for (const char* key : {"family", "statistic", "n", "source", "coefficients"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");
    if (!j["family"].is_string() || !j["statistic"].is_string() || !j["source"].is_string())
        throw std::invalid_argument("family/statistic/source must be strings");
    if (!j["n"].is_number_integer()) throw std::invalid_argument("n must be an integer");
    if (!j["coefficients"].is_array()) throw std::invalid_argument("coefficients must be an array");
    TableRecord r;
    r.family = j["family"].get<std::string>();
    r.statistic = j["statistic"].get<std::string>();
    r.n = j["n"].get<int>();
    r.source = j["source"].get<std::string>();
    for (const auto& c : j["coefficients"]) {
        if (!c.is_string()) throw std::invalid_argument("coefficient is not a string");
        std::string s = c.get<std::string>();
        if (!detail::is_decimal_integer(s)) throw std::invalid_argument("non-numeric coefficient '" + s + "'");
        r.coefficients.push_back(std::move(s));
    }
    if (r.n < 0) throw std::invalid_argument("negative rank");
    return r;
}

inline std::vector<std::string> to_csv_lines(const TableRecord& r) {
    std::vector<std::string> lines;
    for (size_t k = 0; k < r.coefficients.size(); ++k) {
        std::ostringstream os;
        os << r.family << ',' << r.statistic << ',' << r.n << ',' << k << ',' << r.coefficients[k];
        lines.push_back(os.str());
    }
    return lines;
}

// In-memory cache, keyed so saves are deterministic regardless of insertion
// order.  Re-putting a key overwrites.
class TableCache {
   public:
    using Key = std::tuple<std::string, std::string, int, std::string>;

    static Key key_of(const TableRecord& r) { return Key{r.family, r.statistic, r.n, r.source}; }

    void put(TableRecord r) { records_[key_of(r)] = std::move(r); }

    const TableRecord* find(const std::string& family, const std::string& statistic, int n,
                            const std::string& source) const {
        auto it = records_.find(Key{family, statistic, n, source});
        return it == records_.end() ? nullptr : &it->second;
    }

    size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }

    const std::map<Key, TableRecord>& records() const { return records_; }

   private:
    std::map<Key, TableRecord> records_;
};

struct CacheLoadResult {
    TableCache cache;
    std::vector<std::string> diagnostics;  // "line N: reason" for each skipped line
};

// Reads a JSON-lines cache file.  A missing file is an empty cache; corrupt
// lines are skipped and reported with their line numbers.
inline CacheLoadResult load_cache(const std::string& path) {
    CacheLoadResult result;
    std::ifstream in(path);
    if (!in.is_open()) return result;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            result.cache.put(from_json_line(line));
        } catch (const nlohmann::json::parse_error&) {
            result.diagnostics.push_back("line " + std::to_string(line_no) + ": invalid JSON");
        } catch (const std::exception& e) {
            result.diagnostics.push_back("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return result;
}

inline void save_cache(const std::string& path, const TableCache& cache) {
    std::ofstream out(path, std::ios::trunc);
    if (!out.is_open()) throw std::runtime_error("cannot open cache file for writing: " + path);
    for (const auto& [key, record] : cache.records()) out << to_json_line(record) << '\n';
}

}  // namespace coxeuler
