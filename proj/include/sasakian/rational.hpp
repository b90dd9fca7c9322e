#pragma once

/// @file rational.hpp
/// Exact rational scalars. Arbitrary-precision arithmetic is mandatory here:
/// every computation in this library is exact, there is no epsilon anywhere.
///
/// `Rat` is GMP's canonical rational (`mpq_class`): lowest terms, denominator
/// always positive. The helpers below are the only sanctioned ways to build a
/// `Rat` from raw numerator/denominator or from text, because they canonicalize
/// and reject zero denominators (raw `mpq_class` construction does neither).

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sasakian {

using Rat = mpq_class;

/// Build p/q in canonical form. Throws on q == 0.
inline Rat rat(long p, long q = 1) {
    if (q == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

/// Parse "p", "-p", or "p/q" (base 10). Throws std::invalid_argument on
/// malformed input or zero denominator. Whitespace is not accepted.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    std::size_t slash = s.find('/');
    auto digits_ok = [](const std::string& t, bool sign_ok) {
        if (t.empty()) return false;
        std::size_t i = (sign_ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw std::invalid_argument("rat_parse: malformed rational '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

/// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

[[nodiscard]] inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace sasakian
