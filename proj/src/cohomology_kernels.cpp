#include <omp.h>

#include <cstdint>
#include <vector>

#include "ftft/errors.hpp"
#include "ftft/twogroup.hpp"

namespace ftft {

namespace {

// Equations and coboundaries packed into machine words; needs (n-1)^2 <= 30.
struct Packed {
    std::vector<uint32_t> eqs;
    std::vector<uint32_t> boundaries;  // every element of B^2, unit included
    uint32_t bits = 0;
};

Packed pack(const FiniteGroup& g) {
    CochainSpace cs(g);
    if (cs.dim2() > 30) throw UnsupportedInput("brute-force H^2 limited to (|G|-1)^2 <= 30");
    Packed p;
    p.bits = static_cast<uint32_t>(cs.dim2());
    auto word = [&](const Bits& b) {
        uint32_t w = 0;
        for (size_t i = 0; i < b.size(); ++i)
            if (b.get(i)) w |= uint32_t(1) << i;
        return w;
    };
    for (const auto& e : cs.cocycle_equations()) p.eqs.push_back(word(e));
    const size_t m = cs.nonunit.size();
    for (uint32_t s = 0; s < (uint32_t(1) << m); ++s) {
        std::vector<int> sigma(g.order(), 0);
        for (size_t k = 0; k < m; ++k) sigma[cs.nonunit[k]] = (s >> k) & 1;
        p.boundaries.push_back(word(cs.coboundary1(sigma)));
    }
    return p;
}

inline bool is_cocycle(const Packed& p, uint32_t x) {
    for (uint32_t e : p.eqs)
        if (__builtin_popcount(e & x) & 1) return false;
    return true;
}

// A class is counted at its smallest representative.
inline bool is_class_min(const Packed& p, uint32_t x) {
    for (uint32_t b : p.boundaries)
        if ((x ^ b) < x) return false;
    return true;
}

}  // namespace

BruteH2 brute_h2_serial(const FiniteGroup& g) {
    Packed p = pack(g);
    BruteH2 r;
    const uint64_t total = uint64_t(1) << p.bits;
    for (uint64_t x = 0; x < total; ++x) {
        if (!is_cocycle(p, uint32_t(x))) continue;
        ++r.cocycles;
        if (is_class_min(p, uint32_t(x))) ++r.classes;
    }
    return r;
}

BruteH2 brute_h2_parallel(const FiniteGroup& g) {
    Packed p = pack(g);
    const int64_t total = int64_t(1) << p.bits;
    size_t cocycles = 0, classes = 0;
#pragma omp parallel for schedule(static) reduction(+ : cocycles, classes)
    for (int64_t x = 0; x < total; ++x) {
        if (!is_cocycle(p, uint32_t(x))) continue;
        ++cocycles;
        if (is_class_min(p, uint32_t(x))) ++classes;
    }
    return BruteH2{cocycles, classes};
}

}  // namespace ftft
