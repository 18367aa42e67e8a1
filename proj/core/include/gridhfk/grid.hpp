#pragma once

#include <string>
#include <vector>

namespace gridhfk {

// Column c holds an X in row xs[c] and an O in row os[c]. Row 0 is at the
// bottom, column 0 at the left. The knot runs from O to X inside each column
// and from X to O inside each row.
class GridDiagram {
public:
    GridDiagram() = default;

    int n() const { return static_cast<int>(xs_.size()); }
    const std::vector<int>& xs() const { return xs_; }
    const std::vector<int>& os() const { return os_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    int x_column_of_row(int r) const { return x_col_[r]; }
    int o_column_of_row(int r) const { return o_col_[r]; }

    bool same_markers(const GridDiagram& other) const {
        return xs_ == other.xs_ && os_ == other.os_;
    }

    friend GridDiagram new_grid(int n, std::vector<int> xs, std::vector<int> os,
                                std::string name);

private:
    std::vector<int> xs_, os_, x_col_, o_col_;
    std::string name_;
};

// Validates and builds a grid. Throws NotAPermutation, SharedCell or
// MultiComponentLink.
GridDiagram new_grid(int n, std::vector<int> xs, std::vector<int> os, std::string name = "");

enum class Marker { X, O };
enum class Corner { NW, NE, SW, SE };

const char* marker_name(Marker m);
const char* corner_name(Corner c);
Corner parse_corner(const std::string& s);

struct GridMove {
    enum class Kind {
        ColumnCommutation,  // swap columns index and index+1 (mod n)
        RowCommutation,     // swap rows index and index+1 (mod n)
        Stabilization,      // marker in column index; corner = block cell of the lone other-type marker
        Destabilization,    // lone marker sits in cell (index, row)
        ColumnCycle,        // new column c is old column c+index (mod n)
        RowCycle,           // new row r is old row r+index (mod n)
        Rotation,           // 180 degree rotation of the torus
    };

    Kind kind = Kind::ColumnCommutation;
    int index = 0;
    int row = 0;
    Marker marker = Marker::X;
    Corner corner = Corner::NW;

    static GridMove commute_columns(int c) { return {Kind::ColumnCommutation, c}; }
    static GridMove commute_rows(int r) { return {Kind::RowCommutation, r}; }
    static GridMove stabilize(Marker m, int column, Corner k) {
        return {Kind::Stabilization, column, 0, m, k};
    }
    static GridMove destabilize(int column, int row) {
        return {Kind::Destabilization, column, row};
    }
    static GridMove cycle_columns(int k) { return {Kind::ColumnCycle, k}; }
    static GridMove cycle_rows(int k) { return {Kind::RowCycle, k}; }
    static GridMove rotation() { return {Kind::Rotation}; }

    // Script syntax: "C col 3", "C row 2", "S X 2 SW", "D 4 5", "T col 1",
    // "T row 1", "R".
    std::string to_string() const;
    static GridMove parse(const std::string& line);

    bool operator==(const GridMove&) const = default;
};

bool is_legal(const GridDiagram& g, const GridMove& m);
std::vector<GridMove> legal_moves(const GridDiagram& g);
GridDiagram apply_move(const GridDiagram& g, const GridMove& m);

// A move undoing m when applied to apply_move(g, m).
GridMove inverse_move(const GridDiagram& g, const GridMove& m);

struct ClassicalInvariants {
    int tb = 0;
    int rot = 0;
    int sl = 0;
    bool operator==(const ClassicalInvariants&) const = default;
};

// Cusps are the NE and SW corners of the rectilinear projection; vertical
// strands cross over horizontal ones.
ClassicalInvariants classical_invariants(const GridDiagram& g);
int grid_writhe(const GridDiagram& g);

enum class StabilizationClass { LegendrianIsotopy, PositiveStab, NegativeStab, TransverseNontrivial };
const char* stabilization_class_name(StabilizationClass c);
StabilizationClass classify_stabilization(const GridDiagram& g, const GridMove& m);

// Column reversal: the mirror image of the knot.
GridDiagram mirror(const GridDiagram& g);
// Swap rows and columns: the same knot with reversed orientation.
GridDiagram transpose(const GridDiagram& g);
GridDiagram rotate180(const GridDiagram& g);

// The rectilinear closed path: vertices alternate O, X, O, X, ... starting at
// the O of column 0, as (column, row) cell coordinates.
std::vector<std::pair<int, int>> knot_path(const GridDiagram& g);

GridDiagram builtin_library(const std::string& name);
std::vector<std::string> library_names();

}  // namespace gridhfk
