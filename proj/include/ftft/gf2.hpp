#pragma once
#include <cstdint>
#include <optional>
#include <vector>

namespace ftft {

// Bit vector over GF(2).
class Bits {
public:
    Bits() = default;
    explicit Bits(size_t n) : n_(n), w_((n + 63) / 64, 0) {}
    size_t size() const { return n_; }
    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v = true) {
        if (v)
            w_[i >> 6] |= (uint64_t(1) << (i & 63));
        else
            w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    void flip(size_t i) { w_[i >> 6] ^= (uint64_t(1) << (i & 63)); }
    Bits& operator^=(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    // Index of the lowest set bit, or size() if none.
    size_t first() const;
    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Reduced echelon basis over GF(2), pivot = lowest set bit.
class Gf2Space {
public:
    explicit Gf2Space(size_t n) : n_(n) {}
    bool add(Bits v);
    Bits reduce(Bits v) const;
    bool contains(const Bits& v) const { return !reduce(v).any(); }
    size_t rank() const { return rows_.size(); }
    const std::vector<Bits>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return piv_; }
    // Null space of the rows read as equations.
    std::vector<Bits> kernel() const;

private:
    size_t n_;
    std::vector<Bits> rows_;
    std::vector<size_t> piv_;
};

// Solve sum_j x_j * eq_j(columns) ... : rows are equations over n unknowns,
// rhs one bit per row. Free variables are set to 0.
std::optional<Bits> gf2_solve(const std::vector<Bits>& rows, const std::vector<int>& rhs, size_t n);

}  // namespace ftft
