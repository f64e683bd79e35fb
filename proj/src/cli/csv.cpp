#include "tra/cli/csv.hpp"

#include <charconv>
#include <cmath>

namespace tra::cli {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 15);
    return std::string(buf, res.ptr);
}

void CsvWriter::comment(const std::string& text) {
    out_ << (text.rfind("#", 0) == 0 ? text : "# " + text) << '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

}  // namespace tra::cli
