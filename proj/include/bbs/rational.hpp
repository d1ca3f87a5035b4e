#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace bbs {

using Rational = mpq_class;

// Prints "p" for integers and "p/q" otherwise, exactly recoverable.
inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

} // namespace bbs
