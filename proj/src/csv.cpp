#include "pdmosc/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pdmosc::csv {

std::string to_string(const Table& t) {
    if (t.header.size() != t.columns.size())
        throw std::invalid_argument("csv: header/column count mismatch");
    std::string out;
    for (std::size_t c = 0; c < t.header.size(); ++c) {
        if (c) out += ',';
        out += t.header[c];
    }
    out += '\n';
    const std::size_t rows = t.columns.empty() ? 0 : t.columns[0].size();
    for (const auto& col : t.columns)
        if (col.size() != rows)
            throw std::invalid_argument("csv: ragged columns");
    char buf[40];
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            std::snprintf(buf, sizeof(buf), "%.16e", t.columns[c][r]);
            if (c) out += ',';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const Table& t) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("csv: cannot open for writing: " + path);
    os << to_string(t);
    if (!os) throw std::runtime_error("csv: write failed: " + path);
}

Table parse(const std::string& text) {
    Table t;
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("csv: empty input");
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) t.header.push_back(cell);
    t.columns.resize(t.header.size());
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::size_t c = 0;
        while (std::getline(ls, cell, ',')) {
            if (c >= t.columns.size())
                throw std::runtime_error("csv: row wider than header");
            t.columns[c++].push_back(std::stod(cell));
        }
        if (c != t.columns.size())
            throw std::runtime_error("csv: row narrower than header");
    }
    return t;
}

Table read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("csv: cannot open for reading: " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return parse(ss.str());
}

}  // namespace pdmosc::csv
