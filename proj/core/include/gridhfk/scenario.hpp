#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gridhfk/homology.hpp"
#include "gridhfk/legendrian.hpp"
#include "gridhfk/move_maps.hpp"

namespace gridhfk {

// Move scripts shipped with the library, by file stem.
std::vector<std::string> bundled_script_names();
// Throws UnknownName.
const std::string& bundled_script_text(const std::string& name);
MoveScript bundled_script(const std::string& name);

struct EnGridReport {
    std::string name;
    ClassicalInvariants classical;
    bool gradings_ok = false;
    BigradedDims hat;
    bool hat_ok = false;  // equals the table for n
};

struct EnClassReport {
    std::string grid;
    std::string route;  // bundled script into the base grid, empty for the base itself
    HomologyClass cls;  // x+ of the grid carried to the base
};

// Every E(k,l) grid with k + l = n + 1 carries its x+ class into one base
// complex; the involution is the rotation followed by a script back to the
// base, acting on the (2,1) slice.
struct EnScenario {
    int n = 0;
    std::string base;
    BigradedDims expected_hat;
    std::vector<EnGridReport> grids;
    std::vector<EnClassReport> classes;
    HomologyMap involution;
    bool involution_squares_to_identity = false;
    // Index of the first class equal to the image of each class, or -1.
    std::vector<int> involution_image;
    int orbits = 0;
    int expected_orbits = 0;  // ceil(n / 4)

    bool ok() const;
};

// n must be 3 or 5. Throws EvenN or UnknownName.
EnScenario run_en_scenario(int n, const BuildOptions& opt = {});
nlohmann::json to_json(const EnScenario& s);

}  // namespace gridhfk
