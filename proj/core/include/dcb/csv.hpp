#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace dcb {

// Byte-stable CSV writer: '.' decimal separator, '\n' terminated rows,
// header first, numbers printed with a fixed significant-digit count.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header, int precision = 6);

    void begin_row();
    void add(double value);
    void add(const std::string& value);
    void add_empty();
    void end_row();

    std::string str() const { return out_.str(); }

    static std::string format_number(double value, int precision);

private:
    std::ostringstream out_;
    int precision_;
    size_t columns_;
    size_t in_row_ = 0;
    bool row_open_ = false;
};

} // namespace dcb
