#include "ftft/gf2.hpp"

#include <algorithm>

namespace ftft {

size_t Bits::first() const {
    for (size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return k * 64 + __builtin_ctzll(w_[k]);
    return n_;
}

Bits Gf2Space::reduce(Bits v) const {
    for (size_t k = 0; k < rows_.size(); ++k)
        if (v.get(piv_[k])) v ^= rows_[k];
    return v;
}

bool Gf2Space::add(Bits v) {
    v = reduce(std::move(v));
    size_t p = v.first();
    if (p >= n_) return false;
    for (auto& r : rows_)
        if (r.get(p)) r ^= v;
    auto it = std::lower_bound(piv_.begin(), piv_.end(), p);
    size_t pos = it - piv_.begin();
    piv_.insert(it, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

std::vector<Bits> Gf2Space::kernel() const {
    std::vector<bool> is_piv(n_, false);
    for (size_t p : piv_) is_piv[p] = true;
    std::vector<Bits> out;
    for (size_t f = 0; f < n_; ++f) {
        if (is_piv[f]) continue;
        Bits v(n_);
        v.set(f);
        for (size_t k = 0; k < rows_.size(); ++k)
            if (rows_[k].get(f)) v.set(piv_[k]);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Bits> gf2_solve(const std::vector<Bits>& rows, const std::vector<int>& rhs, size_t n) {
    Gf2Space sp(n + 1);
    for (size_t r = 0; r < rows.size(); ++r) {
        Bits b(n + 1);
        for (size_t j = 0; j < n; ++j)
            if (rows[r].get(j)) b.set(j);
        if (rhs[r] & 1) b.set(n);
        sp.add(std::move(b));
    }
    Bits x(n);
    for (size_t k = 0; k < sp.rank(); ++k) {
        size_t p = sp.pivots()[k];
        if (p == n) return std::nullopt;
        if (sp.rows()[k].get(n)) x.set(p);
    }
    return x;
}

}  // namespace ftft
