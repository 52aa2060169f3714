#pragma once

#include <string>
#include <utility>
#include <vector>

namespace grpext {

// One output record: a kind tag plus ordered key=value fields. The
// structured rendering is line-delimited and byte-stable for fixed inputs;
// the text rendering is the same data laid out for reading.
struct Record {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> fields;

    Record& put(const std::string& key, const std::string& value);
    Record& put(const std::string& key, long long value);
    Record& put(const std::string& key, bool value);
    Record& put(const std::string& key, const std::vector<int>& values);  // comma-joined
};

struct Report {
    std::vector<std::pair<std::string, std::string>> header;  // after the version line
    std::vector<Record> records;

    Record& add(const std::string& kind);
    void put_header(const std::string& key, const std::string& value);
};

// "grpext-report 1" followed by "# key=value" header lines, then one line
// per record: the kind, then space-separated key=value pairs.
std::string render_structured(const Report& r);
std::string render_text(const Report& r);

}  // namespace grpext
