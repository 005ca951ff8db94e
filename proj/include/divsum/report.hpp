#ifndef DIVSUM_REPORT_HPP
#define DIVSUM_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace divsum::report {

// One report row as ordered key/value pairs; every numeric field is a
// decimal string so no precision is lost in transit.
using Item = std::vector<std::pair<std::string, std::string>>;

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    int digits_used = 0;
    std::vector<Item> items;
};

// Deterministic JSON (insertion-ordered keys, 2-space indent, trailing
// newline); parse -> re-emit is byte-identical.
std::string to_json(const Report& r);

// CSV with a header row from the first item's keys.
std::string to_csv(const Report& r);

// True when every item's "verdict" field (if present) equals "pass".
bool all_pass(const Report& r);

}  // namespace divsum::report

#endif
