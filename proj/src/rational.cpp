#include "sepvar/rational.hpp"

#include <limits>

#include "sepvar/errors.hpp"

namespace sepvar {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw InputError("empty rational string");
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InputError("cannot parse rational '" + s + "'");
    }
}

std::int64_t to_int64(const Int& v) {
    if (!v.fits_slong_p()) throw InputError("value " + v.get_str() + " exceeds 64-bit range");
    return static_cast<std::int64_t>(v.get_si());
}

}  // namespace sepvar
