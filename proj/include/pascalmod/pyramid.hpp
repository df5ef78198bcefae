#pragma once

/**
 * @file pyramid.hpp
 * @brief Pascal's pyramid modulo p.
 *
 * Cell (x, y, z) holds the trinomial coefficient (x+y+z)! / (x! y! z!)
 * reduced mod p. Plane n collects the cells with x + y + z = n; its k-th
 * line is z = n - k, read along x, and t_{p,n,k} is that line evaluated
 * in base p.
 */

#include "basep.hpp"
#include "nim.hpp"
#include "pascal.hpp"
#include "report.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pascalmod {

/// binom(n; x, y, z) mod p as binom(n, z) binom(n - z, x).
inline Digit trinomial_mod(std::uint64_t n, std::uint64_t x, std::uint64_t y, std::uint64_t z, Prime p) {
    if (x + y + z != n) throw std::domain_error("trinomial_mod: x + y + z must equal n");
    return mul_mod(binom_mod(n, z, p), binom_mod(n - z, x, p), p);
}

/// The three factorizations binom(n, c) binom(n - c, a) with c = x, y, z.
inline std::array<Digit, 3> trinomial_factorizations(std::uint64_t x, std::uint64_t y, std::uint64_t z, Prime p) {
    const std::uint64_t n = x + y + z;
    return {mul_mod(binom_mod(n, z, p), binom_mod(n - z, x, p), p),
            mul_mod(binom_mod(n, x, p), binom_mod(n - x, y, p), p),
            mul_mod(binom_mod(n, y, p), binom_mod(n - y, z, p), p)};
}

struct PyramidPlane {
    std::uint64_t n = 0;
    Prime p{2};
    /// lines[k][i] = binom(n; i, k - i, n - k) mod p.
    std::vector<std::vector<Digit>> lines;

    BigInt line_value(std::size_t k) const { return val<BigInt>(DigitWord(lines.at(k), p)); }

    std::size_t cell_count() const {
        std::size_t c = 0;
        for (const auto& l : lines) c += l.size();
        return c;
    }
};

inline PyramidPlane plane(std::uint64_t n, Prime p) {
    PyramidPlane pl{n, p, {}};
    pl.lines.reserve(n + 1);
    for (std::uint64_t k = 0; k <= n; ++k) {
        std::vector<Digit> line(k + 1);
        for (std::uint64_t i = 0; i <= k; ++i) line[i] = trinomial_mod(n, i, k - i, n - k, p);
        pl.lines.push_back(std::move(line));
    }
    return pl;
}

inline BigInt t_pyramid(std::uint64_t n, std::uint64_t k, Prime p) {
    if (k > n) throw std::domain_error("t_pyramid: k must not exceed n");
    BigInt acc = 0;
    for (std::uint64_t i = k + 1; i-- > 0;) {
        acc *= p.value();
        acc += trinomial_mod(n, i, k - i, n - k, p);
    }
    return acc;
}

/// Three-term Pascal rule over every cell with 1 <= n <= limit.
inline CheckReport pascal_rule_3d_check(std::uint64_t limit, Prime p) {
    CheckReport rep;
    auto at = [&](std::int64_t x, std::int64_t y, std::int64_t z) -> Digit {
        if (x < 0 || y < 0 || z < 0) return 0;
        const auto ux = static_cast<std::uint64_t>(x);
        const auto uy = static_cast<std::uint64_t>(y);
        const auto uz = static_cast<std::uint64_t>(z);
        return trinomial_mod(ux + uy + uz, ux, uy, uz, p);
    };
    for (std::int64_t n = 1; n <= static_cast<std::int64_t>(limit); ++n) {
        for (std::int64_t x = 0; x <= n; ++x) {
            for (std::int64_t y = 0; x + y <= n; ++y) {
                const std::int64_t z = n - x - y;
                ++rep.checked;
                const Digit rhs = (at(x - 1, y, z) + at(x, y - 1, z) + at(x, y, z - 1)) % p;
                if (at(x, y, z) != rhs) {
                    rep.fail("Pascal rule fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                             std::to_string(z) + ")");
                    return rep;
                }
            }
        }
    }
    return rep;
}

/// t_{2,i,j} = t_{2,i-1,j} (+) t_{2,i-1,j-1} (+) 2 t_{2,i-1,j-1} for
/// 1 <= i <= limit, 0 <= j <= i (terms with j outside [0, i] are zero).
inline CheckReport nim_recurrence_2d_check(std::uint64_t limit) {
    CheckReport rep;
    const Prime two(2);
    std::vector<BigInt> prev{t_pyramid(0, 0, two)};
    for (std::uint64_t i = 1; i <= limit; ++i) {
        std::vector<BigInt> cur(i + 1);
        for (std::uint64_t j = 0; j <= i; ++j) {
            cur[j] = t_pyramid(i, j, two);
            const BigInt a = j < i ? prev[j] : BigInt(0);
            const BigInt b = j >= 1 ? prev[j - 1] : BigInt(0);
            ++rep.checked;
            if (cur[j] != nim_add<BigInt>(nim_add<BigInt>(a, b, two), 2 * b, two)) {
                rep.fail("recurrence fails at i = " + std::to_string(i) + ", j = " + std::to_string(j));
                return rep;
            }
        }
        prev = std::move(cur);
    }
    return rep;
}

enum class Axis { X = 0, Y = 1, Z = 2 };

struct TranslationCell {
    std::array<std::uint64_t, 3> from{};  // (x, y, z)
    std::array<std::uint64_t, 3> to{};
    Digit a = 0;                          // eps_k(i - fixed coordinate)
    Digit b = 0;                          // eps_k(source coordinate)
    bool unit_case = false;               // binom(a, b) != 0 mod p
    std::optional<Digit> inverse;         // inverse of binom(a, b) mod p
    bool holds = false;
};

struct TranslationReport {
    bool ok = true;
    std::uint64_t i = 0;
    std::size_t k = 0;
    std::vector<TranslationCell> cells;
    std::string failure;
};

/// In plane i, moves digit k of the `src` coordinate onto `dst`, the third
/// coordinate fixed. With a = eps_k(i - fixed) and b = eps_k(src):
/// if binom(a, b) is a unit, mu_{a,b}^{-1} of the coefficient equals the
/// translated coefficient; otherwise the coefficient itself is 0 mod p.
/// Only cells with src < p^{k+1} are visited.
inline TranslationReport translation_identity_check(std::uint64_t i, std::size_t k, Prime p, Axis src = Axis::X,
                                                    Axis dst = Axis::Y) {
    if (src == dst) throw std::invalid_argument("translation_identity_check: axes must differ");
    const auto s = static_cast<std::size_t>(src);
    const auto d = static_cast<std::size_t>(dst);
    const std::size_t f = 3 - s - d;
    std::uint64_t pk = 1;
    for (std::size_t j = 0; j < k; ++j) pk *= p;
    const std::uint64_t bound = pk * p;

    TranslationReport rep;
    rep.i = i;
    rep.k = k;
    for (std::uint64_t fixed = 0; fixed <= i; ++fixed) {
        for (std::uint64_t sv = 0; sv < bound && sv + fixed <= i; ++sv) {
            TranslationCell c;
            c.from[f] = fixed;
            c.from[s] = sv;
            c.from[d] = i - fixed - sv;
            c.a = digit_at<std::uint64_t>(i - fixed, k, p);
            c.b = digit_at<std::uint64_t>(sv, k, p);
            c.to = c.from;
            c.to[s] -= c.b * pk;
            c.to[d] += c.b * pk;
            const Digit here = trinomial_mod(i, c.from[0], c.from[1], c.from[2], p);
            c.unit_case = c.b <= c.a && digit_binom(c.a, c.b, p) != 0;
            if (c.unit_case) {
                c.inverse = inverse_mod(digit_binom(c.a, c.b, p), p);
                c.holds = mu_inverse(c.a, c.b, here, p) == trinomial_mod(i, c.to[0], c.to[1], c.to[2], p);
            } else {
                c.holds = here == 0;
            }
            if (!c.holds && rep.ok) {
                rep.ok = false;
                rep.failure = "identity fails at (" + std::to_string(c.from[0]) + "," + std::to_string(c.from[1]) +
                              "," + std::to_string(c.from[2]) + ")";
            }
            rep.cells.push_back(c);
        }
    }
    return rep;
}

/// Right-hand side of the block law for the cell (p x + a, p y + b, p z + c).
inline Digit block_relation(std::uint64_t x, std::uint64_t y, std::uint64_t z, Digit a, Digit b, Digit c, Prime p) {
    if (a >= p || b >= p || c >= p) throw std::out_of_range("block_relation: digit out of range");
    if (a + b + c >= p) return 0;
    const Digit local = mul_mod(digit_binom(a + b + c, a, p), digit_binom(b + c, b, p), p);
    return mul_mod(local, trinomial_mod(x + y + z, x, y, z, p), p);
}

/// sigma(q): the p x p x p block q * binom(a+b+c, a) binom(b+c, b), zero
/// when a + b + c >= p. Flat index a + p b + p^2 c.
inline std::vector<Digit> sigma(Prime p, Digit q) {
    std::vector<Digit> cube(static_cast<std::size_t>(p) * p * p, 0);
    for (Digit c = 0; c < p; ++c) {
        for (Digit b = 0; b < p; ++b) {
            for (Digit a = 0; a < p; ++a) {
                if (a + b + c >= p) continue;
                cube[a + p * (b + static_cast<std::size_t>(p) * c)] =
                    mul_mod(q, mul_mod(digit_binom(a + b + c, a, p), digit_binom(b + c, b, p), p), p);
            }
        }
    }
    return cube;
}

struct PyramidCube {
    Prime p{2};
    std::size_t k = 0;
    std::size_t side = 1;
    std::vector<Digit> cells;  // index x + side * y + side^2 * z

    Digit at(std::size_t x, std::size_t y, std::size_t z) const { return cells.at(x + side * (y + side * z)); }
};

inline constexpr std::uint64_t max_cube_cells = std::uint64_t{1} << 27;

/// sigma^k(1).
inline PyramidCube iterate_sigma(Prime p, std::size_t k) {
    std::uint64_t cells = 1;
    for (std::size_t j = 0; j < 3 * k; ++j) {
        cells *= p;
        if (cells > max_cube_cells) throw std::length_error("iterate_sigma: cube exceeds 2^27 cells");
    }
    std::vector<std::vector<Digit>> images;
    for (Digit q = 0; q < p; ++q) images.push_back(sigma(p, q));

    PyramidCube cube{p, 0, 1, {1}};
    for (std::size_t step = 0; step < k; ++step) {
        const std::size_t s = cube.side;
        const std::size_t ns = s * p;
        std::vector<Digit> next(ns * ns * ns);
        for (std::size_t z = 0; z < s; ++z) {
            for (std::size_t y = 0; y < s; ++y) {
                for (std::size_t x = 0; x < s; ++x) {
                    const auto& img = images[cube.cells[x + s * (y + s * z)]];
                    for (Digit c = 0; c < p; ++c) {
                        for (Digit b = 0; b < p; ++b) {
                            for (Digit a = 0; a < p; ++a) {
                                const std::size_t X = p * x + a, Y = p * y + b, Z = p * z + c;
                                next[X + ns * (Y + ns * Z)] = img[a + p * (b + static_cast<std::size_t>(p) * c)];
                            }
                        }
                    }
                }
            }
        }
        cube = PyramidCube{p, step + 1, ns, std::move(next)};
    }
    return cube;
}

/// Cells of plane n read off a cube; lines[k][i] = cell (i, k - i, n - k).
inline PyramidPlane plane_from_cube(const PyramidCube& cube, std::uint64_t n) {
    if (n >= cube.side) throw std::out_of_range("plane_from_cube: plane does not fit in the cube");
    PyramidPlane pl{n, cube.p, {}};
    for (std::uint64_t k = 0; k <= n; ++k) {
        std::vector<Digit> line(k + 1);
        for (std::uint64_t i = 0; i <= k; ++i) line[i] = cube.at(i, k - i, n - k);
        pl.lines.push_back(std::move(line));
    }
    return pl;
}

/// For 0 <= x <= y < p with x + y >= p, compares x against r where r is
/// floor((x+y)/p) (`use_floor`) or (x+y) mod p. Reports the first pair with
/// x <= r.
inline CheckReport carry_digit_lemma_check(Prime p, bool use_floor) {
    CheckReport rep;
    for (Digit y = 0; y < p; ++y) {
        for (Digit x = 0; x <= y; ++x) {
            if (x + y < p) continue;
            ++rep.checked;
            const Digit r = use_floor ? (x + y) / p : (x + y) % p;
            if (!(x > r)) rep.fail("x = " + std::to_string(x) + ", y = " + std::to_string(y));
        }
    }
    return rep;
}

}  // namespace pascalmod
