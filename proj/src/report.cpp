#include "divsum/report.hpp"

#include <json.hpp>

namespace divsum::report {

std::string to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["digits_used"] = r.digits_used;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& item : r.items) {
        nlohmann::ordered_json o = nlohmann::ordered_json::object();
        for (const auto& [k, v] : item) o[k] = v;
        items.push_back(o);
    }
    j["items"] = items;
    return j.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string to_csv(const Report& r) {
    std::string out;
    if (r.items.empty()) return out;
    for (size_t i = 0; i < r.items[0].size(); ++i) {
        if (i) out += ",";
        out += csv_escape(r.items[0][i].first);
    }
    out += "\n";
    for (const auto& item : r.items) {
        for (size_t i = 0; i < item.size(); ++i) {
            if (i) out += ",";
            out += csv_escape(item[i].second);
        }
        out += "\n";
    }
    return out;
}

bool all_pass(const Report& r) {
    for (const auto& item : r.items)
        for (const auto& [k, v] : item)
            if (k == "verdict" && v != "pass") return false;
    return true;
}

}  // namespace divsum::report
