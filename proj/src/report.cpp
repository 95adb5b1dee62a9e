#include "paramodular/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace paramodular {

Section& RunReport::add_section(std::string name, std::vector<std::string> columns)
{
    sections.push_back({std::move(name), std::move(columns), {}});
    return sections.back();
}

bool RunReport::all_pass() const
{
    return std::all_of(suites.begin(), suites.end(), [](const SuiteVerdict& s) { return s.pass; });
}

Format parse_format(const std::string& s)
{
    if (s == "text")
        return Format::Text;
    if (s == "json")
        return Format::Json;
    if (s == "csv")
        return Format::Csv;
    throw std::invalid_argument("unknown format '" + s + "'");
}

std::string cell_string(const Cell& c)
{
    struct V {
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(long v) const { return std::to_string(v); }
        std::string operator()(const Q& q) const { return q.get_str(); }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(V{}, c);
}

namespace {

using nlohmann::ordered_json;

ordered_json to_json(const Cell& c)
{
    if (auto b = std::get_if<bool>(&c))
        return *b;
    if (auto v = std::get_if<long>(&c))
        return *v;
    return cell_string(c);
}

std::string json_doc(const RunReport& r)
{
    ordered_json doc;
    doc["command"] = r.command;
    doc["parameters"] = ordered_json::object();
    for (const auto& [k, v] : r.parameters)
        doc["parameters"][k] = to_json(v);
    doc["sections"] = ordered_json::array();
    for (const auto& s : r.sections) {
        ordered_json sec;
        sec["name"] = s.name;
        sec["rows"] = ordered_json::array();
        for (const auto& row : s.rows) {
            ordered_json o = ordered_json::object();
            for (std::size_t i = 0; i < s.columns.size(); ++i)
                o[s.columns[i]] = to_json(row.at(i));
            sec["rows"].push_back(std::move(o));
        }
        doc["sections"].push_back(std::move(sec));
    }
    doc["suites"] = ordered_json::array();
    for (const auto& s : r.suites)
        doc["suites"].push_back(
            ordered_json{{"name", s.name}, {"trials", s.trials}, {"pass", s.pass}, {"witness", s.witness}});
    return doc.dump(2) + "\n";
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

// One block per section; each block starts with a header row led by "section".
std::string csv_doc(const RunReport& r)
{
    std::ostringstream os;
    bool first = true;
    auto block = [&](const std::string& name, const std::vector<std::string>& cols,
                     const std::vector<std::vector<std::string>>& rows) {
        if (!first)
            os << "\n";
        first = false;
        os << "section";
        for (const auto& c : cols)
            os << "," << csv_field(c);
        os << "\n";
        for (const auto& row : rows) {
            os << csv_field(name);
            for (const auto& v : row)
                os << "," << csv_field(v);
            os << "\n";
        }
    };
    if (!r.parameters.empty()) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [k, v] : r.parameters)
            rows.push_back({k, cell_string(v)});
        block("parameters", {"key", "value"}, rows);
    }
    for (const auto& s : r.sections) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : s.rows) {
            std::vector<std::string> cells;
            for (const auto& c : row)
                cells.push_back(cell_string(c));
            rows.push_back(std::move(cells));
        }
        block(s.name, s.columns, rows);
    }
    if (!r.suites.empty()) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& s : r.suites)
            rows.push_back({s.name, std::to_string(s.trials), s.pass ? "true" : "false", s.witness});
        block("suites", {"name", "trials", "pass", "witness"}, rows);
    }
    return os.str();
}

void text_table(std::ostringstream& os, const std::vector<std::string>& cols,
                const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> w(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i)
        w[i] = cols[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size() && i < w.size(); ++i)
            w[i] = std::max(w[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            s += cells[i];
            if (i + 1 < cells.size())
                s += std::string(w[i] - cells[i].size() + 2, ' ');
        }
        os << "  " << s << "\n";
    };
    line(cols);
    for (const auto& row : rows)
        line(row);
}

std::string text_doc(const RunReport& r)
{
    std::ostringstream os;
    if (!r.command.empty())
        os << r.command << "\n";
    for (const auto& [k, v] : r.parameters)
        os << "  " << k << " = " << cell_string(v) << "\n";
    for (const auto& s : r.sections) {
        os << "\n[" << s.name << "]\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : s.rows) {
            std::vector<std::string> cells;
            for (const auto& c : row)
                cells.push_back(cell_string(c));
            rows.push_back(std::move(cells));
        }
        text_table(os, s.columns, rows);
    }
    if (!r.suites.empty()) {
        os << "\n[suites]\n";
        for (const auto& s : r.suites) {
            os << "  " << (s.pass ? "PASS " : "FAIL ") << s.name << " (" << s.trials << " trials)";
            if (!s.witness.empty())
                os << " witness: " << s.witness;
            os << "\n";
        }
    }
    return os.str();
}

} // namespace

std::string serialize(const RunReport& report, Format format)
{
    switch (format) {
    case Format::Json:
        return json_doc(report);
    case Format::Csv:
        return csv_doc(report);
    default:
        return text_doc(report);
    }
}

} // namespace paramodular
