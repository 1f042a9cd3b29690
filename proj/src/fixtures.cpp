#include "g2micro/fixtures.hpp"

#include <fstream>
#include <sstream>

namespace g2micro {

std::vector<std::vector<std::string>> read_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open fixture: " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> row;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, '\t')) row.push_back(field);
        rows.push_back(std::move(row));
    }
    return rows;
}

long long to_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw FixtureError("bad integer '" + s + "' in " + what);
    }
}

} // namespace g2micro
