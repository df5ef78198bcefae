#pragma once

/**
 * @file render.hpp
 * @brief Plain PGM and SVG renders and CSV plot data.
 */

#include "nim.hpp"
#include "pascal.hpp"
#include "pyramid.hpp"
#include "summatory.hpp"

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pascalmod {

struct Raster {
    std::size_t width = 0;
    std::size_t height = 0;
    Digit maxval = 1;
    std::vector<Digit> pixels;  // row-major

    Digit at(std::size_t x, std::size_t y) const { return pixels.at(y * width + x); }
};

/// Centered triangle: row n starts at column rows - 1 - n and each cell
/// covers two pixels. Pixels outside the triangle are 0.
inline Raster triangle_raster(const std::vector<std::vector<Digit>>& rows, Prime p) {
    const std::size_t h = rows.size();
    Raster r{2 * h, h, p.value() - 1, std::vector<Digit>(2 * h * h, 0)};
    for (std::size_t n = 0; n < h; ++n) {
        const std::size_t start = h - 1 - n;
        for (std::size_t i = 0; i < rows[n].size(); ++i) {
            r.pixels[n * r.width + start + 2 * i] = rows[n][i];
            r.pixels[n * r.width + start + 2 * i + 1] = rows[n][i];
        }
    }
    return r;
}

/// Residue of cell i in row n of a triangle raster.
inline Digit triangle_cell(const Raster& r, std::size_t n, std::size_t i) { return r.at(r.height - 1 - n + 2 * i, n); }

inline Raster render_triangle(Prime p, std::size_t rows) {
    if (rows < 1) throw std::invalid_argument("render_triangle: rows must be >= 1");
    std::vector<std::vector<Digit>> data;
    RowSweep sweep(p);
    for (std::size_t n = 0; n < rows; ++n) data.push_back((n == 0 ? sweep.current() : sweep.next()).coeffs);
    return triangle_raster(data, p);
}

inline Raster render_plane(const PyramidPlane& pl) { return triangle_raster(pl.lines, pl.p); }

/// One side x side image per z value.
inline std::vector<Raster> cube_slices(const PyramidCube& cube) {
    std::vector<Raster> out;
    for (std::size_t z = 0; z < cube.side; ++z) {
        Raster r{cube.side, cube.side, cube.p.value() - 1, {}};
        r.pixels.reserve(cube.side * cube.side);
        for (std::size_t y = 0; y < cube.side; ++y) {
            for (std::size_t x = 0; x < cube.side; ++x) r.pixels.push_back(cube.at(x, y, z));
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline std::string to_pgm(const Raster& r, const std::string& comment = {}) {
    std::ostringstream os;
    os << "P2\n";
    if (!comment.empty()) os << "# " << comment << '\n';
    os << r.width << ' ' << r.height << '\n' << r.maxval << '\n';
    for (std::size_t y = 0; y < r.height; ++y) {
        for (std::size_t x = 0; x < r.width; ++x) os << (x ? " " : "") << r.at(x, y);
        os << '\n';
    }
    return os.str();
}

/// Each row of the triangle as unit squares, one CSS class per residue.
inline std::string triangle_svg(const std::vector<std::vector<Digit>>& rows, Prime p) {
    const std::size_t h = rows.size();
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << 2 * h << ' ' << h << "\">\n";
    os << "<style>";
    for (Digit r = 0; r < p; ++r) {
        const unsigned hue = p > 1 ? 360U * r / p : 0;
        os << ".r" << r << "{fill:" << (r == 0 ? std::string("#ffffff") : "hsl(" + std::to_string(hue) + ",70%,45%)")
           << "}";
    }
    os << "</style>\n";
    for (std::size_t n = 0; n < h; ++n) {
        for (std::size_t i = 0; i < rows[n].size(); ++i) {
            os << "<rect class=\"r" << rows[n][i] << "\" x=\"" << (h - 1 - n + 2 * i) << "\" y=\"" << n
               << "\" width=\"2\" height=\"1\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

inline std::string render_triangle_svg(Prime p, std::size_t rows) {
    if (rows < 1) throw std::invalid_argument("render_triangle_svg: rows must be >= 1");
    std::vector<std::vector<Digit>> data;
    RowSweep sweep(p);
    for (std::size_t n = 0; n < rows; ++n) data.push_back((n == 0 ? sweep.current() : sweep.next()).coeffs);
    return triangle_svg(data, p);
}

// ---------------------------------------------------------------------------
// Plot data

/// n, alpha(n) - n for lo <= n < hi.
inline std::string plot_alpha_diff(std::uint64_t lo, std::uint64_t hi, Prime p = Prime(2)) {
    std::ostringstream os;
    os << "n,alpha_minus_n\n";
    for (std::uint64_t n = lo; n < hi; ++n) {
        os << n << ',' << static_cast<std::int64_t>(alpha<std::uint64_t>(n, p)) - static_cast<std::int64_t>(n) << '\n';
    }
    return os.str();
}

/// M, S_N(M) - S_e(M) for lo <= M < hi.
inline std::string plot_sn_se(std::uint64_t lo, std::uint64_t hi) {
    std::ostringstream os;
    os << "M,diff\n";
    const Prime two(2);
    BigInt diff = 0;
    for (std::uint64_t M = 0; M < hi; ++M) {
        if (M > 0) diff += BigInt(N<std::uint64_t>(M, two)) - BigInt(evil_nth<std::uint64_t>(M));
        if (M >= lo) os << M << ',' << diff << '\n';
    }
    return os.str();
}

/// m, N_p(m) for lo <= m < hi.
inline std::string plot_nim_scatter(std::uint64_t lo, std::uint64_t hi, Prime p = Prime(2)) {
    std::ostringstream os;
    os << "m,N\n";
    for (std::uint64_t m = lo; m < hi; ++m) os << m << ',' << N<std::uint64_t>(m, p) << '\n';
    return os.str();
}

inline std::string plot_parabola(std::size_t k) { return dyadic_csv(dyadic_report(k)); }

}  // namespace pascalmod
