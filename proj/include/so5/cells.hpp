#pragma once

#include "so5/padic.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace so5 {

/**
 * Integration regions over F: the ball |x| <= q^B and the shell |x| = q^s.
 * Cells are cosets center + pi^L R; additive measure q^{-L} each, with
 * int_R dx = 1; multiplicative measure (1-1/q)^{-1} |center|^{-1} q^{-L}
 * when the cell avoids 0, normalized so vol(R^x, d^x) = 1.
 */
struct Region {
    enum Kind { Ball, Shell } kind;
    long exponent; // B for balls, s for shells

    static Region ball(long B) { return {Ball, B}; }
    static Region shell(long s) { return {Shell, s}; }
};

struct Cell {
    Padic center;
    int level;
    Rat additive_measure;
    std::optional<Rat> multiplicative_measure;
};

/**
 * Enumerate the level-L cells of a region.  Cells partition the region
 * and their additive measures sum to its measure; shell cells also carry
 * multiplicative measures summing to 1 per shell.  Requires L >= -B for
 * balls and L >= 1-s for shells.
 */
void for_each_cell(const Field& F, const Region& region, int level,
                   const std::function<void(const Cell&)>& fn);

std::vector<Cell> enumerate_cells(const Field& F, const Region& region, int level);

// Number of cells the enumeration produces.
long long cell_count(const Field& F, const Region& region, int level);

Rat region_measure(const Field& F, const Region& region);

} // namespace so5
