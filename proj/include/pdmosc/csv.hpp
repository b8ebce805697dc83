#pragma once

#include <string>
#include <vector>

namespace pdmosc::csv {

/// A CSV table of double columns; values are written with 17 significant
/// digits and LF line endings so a re-parse reproduces them bit-exactly.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;
};

std::string to_string(const Table& t);
void write_file(const std::string& path, const Table& t);
Table read_file(const std::string& path);
Table parse(const std::string& text);

}  // namespace pdmosc::csv
