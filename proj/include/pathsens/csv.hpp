#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pathsens {

/// Render a double with 17 significant digits (round-trip exact).
std::string format_double(double value);

/// Minimal CSV emitter: comma separator, "\n" terminator, one header row.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(const std::vector<std::string>& names) { write_row(names); }
    void row(const std::vector<std::string>& fields) { write_row(fields); }

private:
    void write_row(const std::vector<std::string>& fields);

    std::ostream& out_;
};

}  // namespace pathsens
