#include "hopfdepth/rational.hpp"

#include <string>

#include "hopfdepth/errors.hpp"

namespace hopfdepth {

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw ParseError("empty rational");
    Rational q;
    try {
        // mpq_class accepts "n" and "n/d"; set_str rejects garbage with -1
        if (q.set_str(s, 10) != 0) throw ParseError("invalid rational: " + s);
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational: " + s);
    }
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

}  // namespace hopfdepth
