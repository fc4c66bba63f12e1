#ifndef PULSEBEAM_GRID_IO_HPP
#define PULSEBEAM_GRID_IO_HPP

#include <string>
#include <vector>

#include "pulsebeam/complex_geometry.hpp"

namespace pulsebeam {

// Planar spacetime slice: the x2 = const plane sampled on an inclusive
// x1 x x3 lattice at a list of times.
struct GridSpec {
    double x1_min = -1.0, x1_max = 1.0;
    int n1 = 2;
    double x3_min = -1.0, x3_max = 1.0;
    int n3 = 2;
    double x2 = 0.0;
    std::vector<double> times;

    void validate() const;
    double x1_at(int i) const { return x1_min + i * (x1_max - x1_min) / (n1 - 1); }
    double x3_at(int k) const { return x3_min + k * (x3_max - x3_min) / (n3 - 1); }
};

enum class Quantity { Abs, Abs2, Re, Im };
enum class Scaling { Linear, LogMagnitude };
enum class OutputFormat { Csv, Pgm, Both };

// Complex samples on one time slice; singular cells are flagged instead of
// aborting the render.
struct FieldGrid {
    GridSpec spec;   // times holds the single slice time
    double time = 0.0;
    std::vector<Complex> values;          // n1 * n3, index i1 * n3 + i3
    std::vector<std::uint8_t> singular;   // same layout

    Complex at(int i1, int i3) const { return values[static_cast<std::size_t>(i1) * spec.n3 + i3]; }
    bool is_singular(int i1, int i3) const {
        return singular[static_cast<std::size_t>(i1) * spec.n3 + i3] != 0;
    }
};

double apply_quantity(Complex v, Quantity q);

// CSV with header x1,x3,t,re,im,abs; singular cells carry nan fields.
void write_csv(const FieldGrid& grid, const std::string& path);

// 16-bit big-endian binary PGM (P5) of the selected quantity plus a
// key=value sidecar `<path>.meta` recording the affine/log map.  Singular
// cells carry the marker value 65535.
void write_pgm(const FieldGrid& grid, const std::string& path, Quantity quantity,
               Scaling scaling);

} // namespace pulsebeam

#endif
