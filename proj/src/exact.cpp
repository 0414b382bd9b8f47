#include "schwarz/exact.hpp"

#include <cctype>

namespace schwarz {

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

std::string exact_to_string(const ExactComplex& c) {
    if (c.is_zero()) return "0";
    if (c.im == 0) return rational_to_string(c.re);
    std::string im_part;
    if (c.im == 1) {
        im_part = "i";
    } else if (c.im == -1) {
        im_part = "-i";
    } else {
        im_part = rational_to_string(c.im) + "*i";
    }
    if (c.re == 0) return im_part;
    std::string s = rational_to_string(c.re);
    if (im_part[0] == '-') {
        s += " - " + im_part.substr(1);
    } else {
        s += " + " + im_part;
    }
    return s;
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal", 0);
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    bool digits = false, slash = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits = true;
        } else if (s[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            throw ParseError("malformed rational literal '" + s + "'", i);
        }
    }
    if (!digits) throw ParseError("malformed rational literal '" + s + "'", s.size());
    Rational q(s);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 0);
    q.canonicalize();
    return q;
}

} // namespace schwarz
