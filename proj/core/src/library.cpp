#include <map>

#include "gridhfk/error.hpp"
#include "gridhfk/grid.hpp"

namespace gridhfk {

namespace {

struct Entry {
    std::vector<int> xs, os;
};

const std::map<std::string, Entry>& table() {
    static const std::map<std::string, Entry> t = {
        {"unknot2", {{0, 1}, {1, 0}}},
        {"trefoil_rh", {{1, 0, 4, 3, 2}, {4, 3, 2, 1, 0}}},
        {"trefoil_lh", {{2, 3, 4, 0, 1}, {0, 1, 2, 3, 4}}},
        {"figure8", {{3, 4, 2, 1, 5, 0}, {5, 1, 0, 3, 2, 4}}},
        {"E(1,1)", {{4, 0, 1, 2, 3}, {1, 2, 3, 4, 0}}},
        {"E(3,1)", {{1, 2, 3, 6, 0, 4, 5}, {3, 4, 0, 1, 5, 6, 2}}},
        {"E(1,3)", {{6, 2, 3, 4, 0, 1, 5}, {3, 4, 5, 1, 2, 6, 0}}},
        {"E(3,3)", {{1, 4, 5, 6, 2, 8, 0, 3, 7}, {5, 6, 0, 3, 4, 1, 7, 8, 2}}},
        {"E(1,5)", {{8, 4, 5, 6, 2, 3, 0, 1, 7}, {5, 6, 7, 3, 4, 1, 2, 8, 0}}},
    };
    return t;
}

}  // namespace

GridDiagram builtin_library(const std::string& name) {
    if (name == "E(5,1)") {
        auto g = rotate180(builtin_library("E(1,5)"));
        g.set_name(name);
        return g;
    }
    const auto it = table().find(name);
    if (it == table().end()) throw Error(ErrorCode::UnknownName, "no library grid named '" + name + "'");
    const int n = static_cast<int>(it->second.xs.size());
    return new_grid(n, it->second.xs, it->second.os, name);
}

std::vector<std::string> library_names() {
    return {"unknot2", "trefoil_rh", "trefoil_lh", "figure8", "E(1,1)", "E(1,3)",
            "E(3,1)", "E(1,5)", "E(3,3)", "E(5,1)"};
}

}  // namespace gridhfk
