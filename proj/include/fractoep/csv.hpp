#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fractoep {

// Scientific, 12 significant digits, locale independent; "nan", "inf", "-inf".
std::string format_number(double v);

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(const std::vector<double>& values);
    const std::vector<std::string>& header() const { return header_; }
    std::size_t rows() const { return rows_.size(); }

    // Comma separated, '\n' line endings, header first.
    void write(std::ostream& os) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<double>> rows_;
};

}  // namespace fractoep
