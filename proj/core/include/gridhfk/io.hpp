#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "gridhfk/complex.hpp"
#include "gridhfk/grid.hpp"
#include "gridhfk/homology.hpp"
#include "gridhfk/legendrian.hpp"
#include "gridhfk/move_maps.hpp"
#include "gridhfk/oracle.hpp"

namespace gridhfk {

// Grid files: "n", then x_perm, then o_perm; '#' starts a comment. Throws
// ParseError with a line:column location, or the validation errors.
GridDiagram parse_grid(const std::string& text, const std::string& origin = "<input>");
GridDiagram read_grid_file(const std::filesystem::path& p);
std::string format_grid(const GridDiagram& g);

// Script files: "start <grid file>" or "start library <name>", then one move
// per line. Relative paths resolve against base_dir.
MoveScript parse_script(const std::string& text, const std::filesystem::path& base_dir,
                        const std::string& origin = "<script>");
MoveScript read_script_file(const std::filesystem::path& p);
std::string format_script(const MoveScript& s, const std::string& start_line);

nlohmann::json to_json(const BigradedDims& d);
BigradedDims dims_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MinusTable& t);
nlohmann::json to_json(const ClassicalInvariants& c);
nlohmann::json to_json(const HomologyClass& c);
nlohmann::json legendrian_report_json(const GridDiagram& g, const GradingReport& r,
                                      bool plus_nonzero, bool minus_nonzero);

// Slice cache, keyed by a hash of the grid and the Alexander filter.
std::string cache_key(const GridDiagram& g, const std::set<int>& filter);
void write_slice_cache(const SlicedComplex& c, const std::filesystem::path& file);
std::optional<SlicedComplex> read_slice_cache(const GridDiagram& g, const std::set<int>& filter,
                                              const std::filesystem::path& file);
// build_slices with a cache directory; missing or stale files are rebuilt.
SlicedComplex build_slices_cached(const GridDiagram& g, const BuildOptions& opt,
                                  const std::optional<std::filesystem::path>& cache_dir);

}  // namespace gridhfk
