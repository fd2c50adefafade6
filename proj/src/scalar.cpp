#include "laukit/scalar.hpp"

#include <cmath>
#include <sstream>

#include "laukit/error.hpp"

namespace laukit {

Scalar& Scalar::operator/=(const Scalar& o) {
    Rational n = o.norm_sq();
    if (n == 0) throw Error("scalar division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

// Imaginary part as "<rational>i", with 1 and -1 collapsing to "i" / "-i".
std::string imag_str(const Rational& im) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return rational_str(im) + "i";
}

}  // namespace

std::string to_string(const Scalar& s) {
    if (s.im == 0) return rational_str(s.re);
    if (s.re == 0) return imag_str(s.im);
    std::string out = rational_str(s.re);
    if (s.im > 0) out += '+';
    return out + imag_str(s.im);
}

double to_double(const Rational& r) {
    return r.get_d();
}

double abs_double(const Scalar& s) {
    return std::sqrt(to_double(s.norm_sq()));
}

}  // namespace laukit
