#ifndef DIAGALG_RATIONAL_HPP
#define DIAGALG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace diagalg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return numerator(r); }
inline Int rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string int_to_string(const Int& v) { return v.str(); }

// "num" when the denominator is 1, "num/den" otherwise.
inline std::string rat_to_string(const Rational& r)
{
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rat_from_string(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(num, den);
}

// C(m, j) for arbitrary integer m and j >= 0, with C(m, 0) = 1 even for
// negative m: the falling-factorial convention m(m-1)...(m-j+1)/j!.
inline Int binomial(const Int& m, long j)
{
    if (j < 0) return 0;
    Int num = 1, den = 1;
    for (long k = 0; k < j; ++k) {
        num *= m - k;
        den *= k + 1;
    }
    Int q, r;
    divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("binomial: non-integral result");
    return q;
}

} // namespace diagalg

#endif
