#include "selforth/report.hpp"

#include <sstream>

namespace selforth {

std::string TextTable::str() const {
    std::vector<size_t> width(header_.size(), 0);
    for (size_t c = 0; c < header_.size(); ++c) width[c] = header_[c].size();
    for (const auto& row : rows_)
        for (size_t c = 0; c < row.size() && c < width.size(); ++c)
            width[c] = std::max(width[c], row[c].size());

    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (size_t c = 0; c < width.size(); ++c) {
            const std::string& v = c < cells.size() ? cells[c] : std::string();
            os << "  " << v;
            if (c + 1 < width.size()) os << std::string(width[c] - v.size(), ' ');
        }
        os << "\n";
    };
    line(header_);
    std::vector<std::string> rule;
    for (size_t c = 0; c < width.size(); ++c) rule.push_back(std::string(width[c], '-'));
    line(rule);
    for (const auto& row : rows_) line(row);
    return os.str();
}

} // namespace selforth
