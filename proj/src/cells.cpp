#include "so5/cells.hpp"

namespace so5 {

void for_each_cell(const Field& F, const Region& region, int level,
                   const std::function<void(const Cell&)>& fn) {
    const long long p = F.p;
    Rat add = qpow(p, -level);
    if (region.kind == Region::Ball) {
        long B = region.exponent;
        if (level < -B) throw std::invalid_argument("for_each_cell: cells larger than the ball");
        long k = B + level; // centers m * pi^{-B}, m in [0, p^k)
        long long count = 1;
        for (long i = 0; i < k; ++i) count *= p;
        for (long long m = 0; m < count; ++m) {
            Cell c{Padic::from_rat(F, Int(m), ipow(Int(p), static_cast<unsigned>(B))), level, add,
                   std::nullopt};
            fn(c);
        }
    } else {
        long s = region.exponent;
        if (level + s < 1) throw std::invalid_argument("for_each_cell: cells larger than the shell");
        long k = s + level; // centers m * pi^{-s}, m in [0, p^k), p !| m
        long long count = 1;
        for (long i = 0; i < k; ++i) count *= p;
        Rat mult = Rat(p, p - 1) * qpow(p, -s) * add; // (1-1/q)^{-1} |x|^{-1} dx
        for (long long m = 1; m < count; ++m) {
            if (m % p == 0) continue;
            Cell c{Padic::from_rat(F, Int(m), ipow(Int(p), static_cast<unsigned>(s))), level, add, mult};
            fn(c);
        }
    }
}

std::vector<Cell> enumerate_cells(const Field& F, const Region& region, int level) {
    std::vector<Cell> out;
    for_each_cell(F, region, level, [&](const Cell& c) { out.push_back(c); });
    return out;
}

long long cell_count(const Field& F, const Region& region, int level) {
    const long long p = F.p;
    if (region.kind == Region::Ball) {
        long k = region.exponent + level;
        long long n = 1;
        for (long i = 0; i < k; ++i) n *= p;
        return n;
    }
    long k = region.exponent + level;
    long long n = 1;
    for (long i = 0; i < k - 1; ++i) n *= p;
    return n * (p - 1);
}

Rat region_measure(const Field& F, const Region& region) {
    if (region.kind == Region::Ball) return qpow(F.p, region.exponent);
    return qpow(F.p, region.exponent) * Rat(F.p - 1, F.p);
}

} // namespace so5
