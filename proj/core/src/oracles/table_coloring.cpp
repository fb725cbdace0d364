#include "hindman/oracles/table_coloring.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hindman::oracles {

TableColoring::TableColoring(Color colors, std::vector<Color> table)
    : colors_(colors), table_(std::move(table)) {
    if (colors_ < 1) throw std::domain_error("TableColoring: need at least one color");
    for (Color c : table_) {
        if (c >= colors_)
            throw std::domain_error("TableColoring: entry " + std::to_string(c) + " exceeds r-1");
    }
}

std::string TableColoring::to_text() const {
    std::ostringstream os;
    os << colors_ << ' ' << table_.size() << '\n';
    for (std::size_t i = 0; i < table_.size(); ++i) {
        if (i) os << ' ';
        os << table_[i];
    }
    os << '\n';
    return os.str();
}

TableColoring TableColoring::parse(const std::string& text) {
    std::istringstream is(text);
    std::int64_t r = 0, n = 0;
    if (!(is >> r >> n) || r < 1 || n < 0)
        throw std::domain_error("TableColoring::parse: malformed header, expected \"r n\"");
    std::vector<Color> table;
    table.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t c = 0;
        if (!(is >> c) || c < 0)
            throw std::domain_error("TableColoring::parse: expected " + std::to_string(n) +
                                    " color entries");
        table.push_back(static_cast<Color>(c));
    }
    std::string trailing;
    if (is >> trailing)
        throw std::domain_error("TableColoring::parse: trailing token \"" + trailing + "\"");
    return TableColoring(static_cast<Color>(r), std::move(table));
}

TableColoring TableColoring::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("TableColoring::load: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

void TableColoring::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::domain_error("TableColoring::save: cannot open " + path);
    out << to_text();
}

Coloring TableColoring::as_coloring() const {
    std::vector<Color> table = table_;
    return Coloring(
        colors_,
        [table](const BigNat& n) { return table[n.to_uint64() - 1]; },
        BigNat(static_cast<std::uint64_t>(table_.size())), "table");
}

}  // namespace hindman::oracles
