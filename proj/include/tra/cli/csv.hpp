#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tra::cli {

/// 15 significant digits, '.' decimal point, independent of the locale.
std::string format_number(double value);

/// Comma-separated rows terminated by '\n'.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void comment(const std::string& text);
    void row(const std::vector<std::string>& cells);

private:
    std::ostream& out_;
};

}  // namespace tra::cli
