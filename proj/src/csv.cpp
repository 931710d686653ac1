#include "fractoep/csv.hpp"

#include <charconv>
#include <cmath>

#include "fractoep/errors.hpp"

namespace fractoep {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 11);
    return std::string(buf, res.ptr);
}

void CsvTable::add_row(const std::vector<double>& values) {
    if (values.size() != header_.size()) throw DomainError("csv: row width does not match the header");
    rows_.push_back(values);
}

void CsvTable::write(std::ostream& os) const {
    for (std::size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << header_[i];
    os << '\n';
    for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << format_number(r[i]);
        os << '\n';
    }
}

}  // namespace fractoep
