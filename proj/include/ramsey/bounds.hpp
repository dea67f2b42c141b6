#pragma once

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "ramsey/errors.hpp"

namespace ramsey {

// Best known strict lower bounds: entries (p,q) -> n meaning R(p,q) > n.
// Keys are normalized to p <= q; inserting both (p,q) and (q,p) keeps the
// larger bound.
struct KnownBoundsTable {
    std::map<std::pair<int, int>, int> entries;

    void insert(int p, int q, int n) {
        if (p > q)
            std::swap(p, q);
        auto [it, fresh] = entries.try_emplace({p, q}, n);
        if (!fresh && n > it->second)
            it->second = n;
    }

    std::optional<int> lookup(int p, int q) const {
        if (p > q)
            std::swap(p, q);
        auto it = entries.find({p, q});
        if (it == entries.end())
            return std::nullopt;
        return it->second;
    }

    bool operator==(const KnownBoundsTable&) const = default;
};

// CSV records "p,q,n" (one per line, meaning R(p,q) > n). Lines starting
// with '#' and blank lines are skipped.
inline KnownBoundsTable load_known_bounds(std::istream& in) {
    KnownBoundsTable table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        int p = 0, q = 0, n = 0;
        char comma1 = 0, comma2 = 0;
        std::string trailing;
        if (!(fields >> p >> comma1 >> q >> comma2 >> n) || comma1 != ',' || comma2 != ',' ||
            (fields >> trailing))
            throw ParseError("malformed record, expected 'p,q,n'", line_no);
        if (p < 2 || q < 2)
            throw ParseError("clique sizes must be >= 2", line_no);
        if (n < std::min(p, q))
            throw ParseError("bound n = " + std::to_string(n) + " below min(p,q)", line_no);
        table.insert(p, q, n);
    }
    return table;
}

inline KnownBoundsTable load_known_bounds(const std::string& text) {
    std::istringstream in(text);
    return load_known_bounds(in);
}

// The values quoted in the starter data file, compiled in so the CLI works
// without any file on disk.
inline KnownBoundsTable builtin_known_bounds() {
    KnownBoundsTable table;
    table.insert(3, 4, 8);
    table.insert(4, 4, 17);
    table.insert(6, 6, 101);
    table.insert(3, 15, 72);
    table.insert(4, 22, 313);
    table.insert(4, 25, 457);
    return table;
}

} // namespace ramsey
