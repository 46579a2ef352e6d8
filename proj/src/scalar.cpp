#include "ftft/scalar.hpp"

#include <cctype>

#include "ftft/errors.hpp"

namespace ftft {

Scalar& Scalar::operator+=(const Scalar& o) {
    re += o.re;
    if (sgn(o.im) != 0) im += o.im;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re -= o.re;
    if (sgn(o.im) != 0) im -= o.im;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(im) == 0 && sgn(o.im) == 0) {
        re *= o.re;
        return *this;
    }
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(i)");
    if (sgn(im) == 0) return Scalar(mpq_class(1) / re);
    mpq_class n = norm2();
    return Scalar(re / n, -im / n);
}

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rat(const std::string& s, const std::string& whole) {
    if (s.empty()) throw StructuralError("bad scalar: '" + whole + "'");
    for (char ch : s)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
            throw StructuralError("bad scalar: '" + whole + "'");
    std::string t = s[0] == '+' ? s.substr(1) : s;
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw StructuralError("bad scalar: '" + whole + "'");
    if (q.get_den() == 0) throw StructuralError("zero denominator: '" + whole + "'");
    q.canonicalize();
    return q;
}

}  // namespace

std::string Scalar::str() const {
    if (sgn(im) == 0) return rat_str(re);
    std::string ipart;
    mpq_class a = abs(im);
    if (a == 1)
        ipart = "i";
    else if (a.get_den() == 1)
        ipart = rat_str(a) + "i";
    else
        ipart = rat_str(a) + " i";
    if (sgn(re) == 0) return (sgn(im) < 0 ? "-" : "") + ipart;
    return rat_str(re) + (sgn(im) < 0 ? "-" : "+") + ipart;
}

Scalar Scalar::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw StructuralError("empty scalar");
    if (s.back() != 'i') return Scalar(parse_rat(s, text));
    s.pop_back();
    // split at the last sign that is not leading and not inside a fraction start
    size_t split = std::string::npos;
    for (size_t k = s.size(); k-- > 1;)
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    std::string rpart, ipart;
    if (split == std::string::npos) {
        ipart = s;
    } else {
        rpart = s.substr(0, split);
        ipart = s.substr(split);
    }
    mpq_class im;
    if (ipart.empty() || ipart == "+")
        im = 1;
    else if (ipart == "-")
        im = -1;
    else
        im = parse_rat(ipart, text);
    mpq_class re = rpart.empty() ? mpq_class(0) : parse_rat(rpart, text);
    return Scalar(re, im);
}

}  // namespace ftft
