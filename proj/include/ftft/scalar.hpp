#pragma once
#include <gmpxx.h>

#include <string>

namespace ftft {

// Element of Q(i). Both parts are kept canonical by GMP.
struct Scalar {
    mpq_class re{0};
    mpq_class im{0};

    Scalar() = default;
    Scalar(long v) : re(v) {}
    Scalar(int v) : re(v) {}
    Scalar(mpq_class r) : re(std::move(r)) {}
    Scalar(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    Scalar(long n, long d) : re(n, d) { re.canonicalize(); }

    static Scalar I() { return Scalar(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }

    Scalar conj() const { return Scalar(re, -im); }
    // |x|^2, always rational.
    mpq_class norm2() const { return re * re + im * im; }
    Scalar inv() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re, -im); }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;
    static Scalar parse(const std::string& text);
};

inline Scalar conjugate(const Scalar& x) { return x.conj(); }
// (-1)^k as a scalar
inline Scalar sign(int k) { return Scalar((k & 1) ? -1 : 1); }
// conj applied k times
inline Scalar conj_pow(const Scalar& x, int k) { return (k & 1) ? x.conj() : x; }

}  // namespace ftft
