#ifndef SEPVAR_RATIONAL_HPP
#define SEPVAR_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace sepvar {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// gmpxx has no long long constructors; we are on LP64 where long is 64-bit.
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }
inline Int int_of(long long v) { return Int(static_cast<long>(v)); }

inline std::string rat_to_string(const Rat& r) {
    Rat c(r);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Parses "a", "-a" or "a/b".
Rat rat_from_string(const std::string& s);

inline Int binomial(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

// Converts to int64, throwing on overflow.
std::int64_t to_int64(const Int& v);

}  // namespace sepvar

#endif
