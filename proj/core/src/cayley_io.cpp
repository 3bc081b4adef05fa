#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "latnorm/constructors.hpp"

namespace latnorm {

Group load_cayley_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open Cayley table file: " + path);
    return load_cayley_table(in, path);
}

Group load_cayley_table(std::istream& in, const std::string& label) {
    std::vector<long long> values;
    std::string line;
    int lineno = 0;
    long long order = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        long long v;
        while (row >> v) {
            if (order < 0) {
                order = v;
                if (order < 1 || order > kMaxGroupOrder)
                    throw std::invalid_argument(label + ":" + std::to_string(lineno) +
                                                ": order " + std::to_string(order) +
                                                " outside 1.." + std::to_string(kMaxGroupOrder));
                continue;
            }
            if (v < 0 || v >= order)
                throw std::invalid_argument(label + ":" + std::to_string(lineno) + ": entry " +
                                            std::to_string(v) + " outside 0.." +
                                            std::to_string(order - 1));
            values.push_back(v);
        }
        if (!row.eof())
            throw std::invalid_argument(label + ":" + std::to_string(lineno) +
                                        ": not an integer near '" + line + "'");
    }
    if (order < 0) throw std::invalid_argument(label + ": empty Cayley table file");
    if (values.size() != static_cast<std::size_t>(order) * order)
        throw std::invalid_argument(label + ": expected " + std::to_string(order * order) +
                                    " table entries, got " + std::to_string(values.size()));
    std::vector<int> table(values.begin(), values.end());
    return Group(std::move(table), static_cast<int>(order), label);
}

}  // namespace latnorm
