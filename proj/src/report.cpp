#include "grpext/report.hpp"

#include <sstream>

namespace grpext {

Record& Record::put(const std::string& key, const std::string& value) {
    fields.emplace_back(key, value);
    return *this;
}

Record& Record::put(const std::string& key, long long value) {
    return put(key, std::to_string(value));
}

Record& Record::put(const std::string& key, bool value) {
    return put(key, std::string(value ? "true" : "false"));
}

Record& Record::put(const std::string& key, const std::vector<int>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values[i]);
    }
    return put(key, s);
}

Record& Report::add(const std::string& kind) {
    records.push_back(Record{kind, {}});
    return records.back();
}

void Report::put_header(const std::string& key, const std::string& value) {
    header.emplace_back(key, value);
}

std::string render_structured(const Report& r) {
    std::ostringstream out;
    out << "grpext-report 1\n";
    for (const auto& [k, v] : r.header) out << "# " << k << "=" << v << "\n";
    for (const auto& rec : r.records) {
        out << rec.kind;
        for (const auto& [k, v] : rec.fields) out << " " << k << "=" << v;
        out << "\n";
    }
    return out.str();
}

std::string render_text(const Report& r) {
    std::ostringstream out;
    for (const auto& [k, v] : r.header) out << k << ": " << v << "\n";
    for (const auto& rec : r.records) {
        out << "[" << rec.kind << "]\n";
        for (const auto& [k, v] : rec.fields) out << "  " << k << ": " << v << "\n";
    }
    return out.str();
}

}  // namespace grpext
