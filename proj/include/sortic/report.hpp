// Line-oriented analysis reports: stable keys, exact integers, deterministic
// ordering. A report is a function of the instance alone.

#ifndef SORTIC_REPORT_HPP
#define SORTIC_REPORT_HPP

#include <set>
#include <string>
#include <vector>

#include "sortic/instance.hpp"
#include "sortic/integer.hpp"

namespace sortic {

class Report {
public:
    void add(const std::string& key, const std::string& value) {
        lines_.push_back({key, value});
    }
    void add(const std::string& key, long long value) {
        add(key, std::to_string(value));
    }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }
    void add(const std::string& key, bool value) {
        add(key, std::string(value ? "true" : "false"));
    }
    void add(const std::string& key, const Integer& value) { add(key, value.str()); }

    const std::vector<std::pair<std::string, std::string>>& lines() const {
        return lines_;
    }
    std::string str() const;
    // Value of the first line with this key; empty string if absent.
    std::string value(const std::string& key) const;

private:
    std::vector<std::pair<std::string, std::string>> lines_;
};

enum class Selector {
    recognize,
    sortable,
    cone,
    divisor,
    conjecture,
    groebner,
    vd,
    cm,
};

using SelectorSet = std::set<Selector>;

SelectorSet all_selectors();
// Parses a comma-separated selector list; "all" expands to everything.
SelectorSet parse_selectors(const std::string& text);

// Runs the selected pipelines in dependency order. Selectors whose
// preconditions the instance does not meet produce `<section>.skipped` lines
// rather than failing.
Report run_analysis(const ParsedInstance& inst, const SelectorSet& selectors);

} // namespace sortic

#endif
