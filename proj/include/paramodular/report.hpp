#pragma once

#include "paramodular/rational.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace paramodular {

// Rationals stay exact: they serialize as "p/q" strings, never as floats.
using Cell = std::variant<bool, long, Q, std::string>;
using Fields = std::vector<std::pair<std::string, Cell>>;

struct Section {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct SuiteVerdict {
    std::string name;
    long trials = 0;
    bool pass = true;
    std::string witness; // first counterexample, empty on success
};

struct RunReport {
    std::string command;
    Fields parameters;
    std::vector<Section> sections;
    std::vector<SuiteVerdict> suites;

    Section& add_section(std::string name, std::vector<std::string> columns);
    bool all_pass() const;
};

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s);
std::string cell_string(const Cell& c);
std::string serialize(const RunReport& report, Format format);

} // namespace paramodular
