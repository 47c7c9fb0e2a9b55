#ifndef ordo_rational_hpp
#define ordo_rational_hpp

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ordo {

// Exact rational arithmetic for strengths and thresholds. Strict
// inequalities against alpha must never suffer rounding, so no
// floating point appears anywhere in the library.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Parses "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        std::int64_t p = std::stoll(s.substr(0, slash));
        std::int64_t q = std::stoll(s.substr(slash + 1));
        return Rational(p, q);
    } catch (const boost::bad_rational&) {
        throw std::invalid_argument("zero denominator in rational: " + s);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

} // namespace ordo

#endif
