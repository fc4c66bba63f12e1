#include "pulsebeam/grid_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "pulsebeam/errors.hpp"

namespace pulsebeam {

void GridSpec::validate() const {
    if (!(x1_max > x1_min) || !(x3_max > x3_min))
        throw InvalidParameterError("grid ranges must be nonempty");
    if (n1 < 2 || n3 < 2)
        throw InvalidParameterError("grid resolution must be >= 2 per axis");
    if (times.empty())
        throw InvalidParameterError("grid requires at least one time");
}

double apply_quantity(Complex v, Quantity q) {
    switch (q) {
        case Quantity::Abs: return std::abs(v);
        case Quantity::Abs2: return std::norm(v);
        case Quantity::Re: return v.real();
        case Quantity::Im: return v.imag();
    }
    return 0.0;
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void write_csv(const FieldGrid& grid, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "x1,x3,t,re,im,abs\n";
    for (int i1 = 0; i1 < grid.spec.n1; ++i1) {
        for (int i3 = 0; i3 < grid.spec.n3; ++i3) {
            out << format_double(grid.spec.x1_at(i1)) << ','
                << format_double(grid.spec.x3_at(i3)) << ','
                << format_double(grid.time) << ',';
            if (grid.is_singular(i1, i3)) {
                out << "nan,nan,nan\n";
            } else {
                const Complex v = grid.at(i1, i3);
                out << format_double(v.real()) << ',' << format_double(v.imag()) << ','
                    << format_double(std::abs(v)) << '\n';
            }
        }
    }
}

void write_pgm(const FieldGrid& grid, const std::string& path, Quantity quantity,
               Scaling scaling) {
    constexpr std::uint16_t kSingularMarker = 65535;
    constexpr double kLogFloor = 1e-300;

    const int n1 = grid.spec.n1, n3 = grid.spec.n3;
    std::vector<double> mapped(static_cast<std::size_t>(n1) * n3, 0.0);
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (int i1 = 0; i1 < n1; ++i1) {
        for (int i3 = 0; i3 < n3; ++i3) {
            const std::size_t idx = static_cast<std::size_t>(i1) * n3 + i3;
            if (grid.singular[idx]) continue;
            double s = apply_quantity(grid.values[idx], quantity);
            if (scaling == Scaling::LogMagnitude)
                s = std::log10(std::max(std::fabs(s), kLogFloor));
            mapped[idx] = s;
            if (first) { lo = hi = s; first = false; }
            else { lo = std::min(lo, s); hi = std::max(hi, s); }
        }
    }
    const double span = hi > lo ? hi - lo : 1.0;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "P5\n" << n1 << ' ' << n3 << "\n65535\n";
    for (int i3 = 0; i3 < n3; ++i3) {
        for (int i1 = 0; i1 < n1; ++i1) {
            const std::size_t idx = static_cast<std::size_t>(i1) * n3 + i3;
            std::uint16_t pix = kSingularMarker;
            if (!grid.singular[idx]) {
                const double u = (mapped[idx] - lo) / span;
                pix = static_cast<std::uint16_t>(std::lround(u * 65534.0));
            }
            const unsigned char bytes[2] = {static_cast<unsigned char>(pix >> 8),
                                            static_cast<unsigned char>(pix & 0xff)};
            out.write(reinterpret_cast<const char*>(bytes), 2);
        }
    }

    std::ofstream meta(path + ".meta", std::ios::binary);
    if (!meta) throw std::runtime_error("cannot open " + path + ".meta");
    meta << "min=" << format_double(lo) << '\n'
         << "max=" << format_double(hi) << '\n'
         << "scaling=" << (scaling == Scaling::LogMagnitude ? "log" : "linear") << '\n'
         << "singular_marker=" << kSingularMarker << '\n';
}

} // namespace pulsebeam
