#include "dcb/csv.hpp"

#include "dcb/errors.hpp"

#include <cstdio>

namespace dcb {

CsvWriter::CsvWriter(std::vector<std::string> header, int precision)
    : precision_(precision), columns_(header.size()) {
    if (header.empty())
        throw DomainError("CSV needs at least one column");
    if (precision < 1 || precision > 17)
        throw DomainError("CSV precision must lie in [1, 17]");
    for (size_t i = 0; i < header.size(); ++i) {
        if (i)
            out_ << ',';
        out_ << header[i];
    }
    out_ << '\n';
}

void CsvWriter::begin_row() {
    if (row_open_)
        throw StateError("previous CSV row not finished");
    row_open_ = true;
    in_row_ = 0;
}

void CsvWriter::add(double value) { add(format_number(value, precision_)); }

void CsvWriter::add(const std::string& value) {
    if (!row_open_ || in_row_ >= columns_)
        throw StateError("CSV cell outside an open row");
    if (in_row_)
        out_ << ',';
    out_ << value;
    ++in_row_;
}

void CsvWriter::add_empty() { add(std::string()); }

void CsvWriter::end_row() {
    if (!row_open_ || in_row_ != columns_)
        throw StateError("CSV row has wrong number of cells");
    out_ << '\n';
    row_open_ = false;
}

std::string CsvWriter::format_number(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    return buf;
}

} // namespace dcb
