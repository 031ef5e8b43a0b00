#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace jsa {

// Exact rational scalar. mpq_class keeps values canonical: reduced to lowest
// terms, denominator > 0, zero stored as 0/1.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or an integer string. Rejects empty input, zero denominators
// and anything mpz does not accept in base 10.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// (-1)^e
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace jsa
