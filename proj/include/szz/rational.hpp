#ifndef SZZ_RATIONAL_HPP
#define SZZ_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace szz {

// Exact arithmetic everywhere: arbitrary-precision integers for cycle
// coefficients, rationals for everything in k*.
using Int = mpz_class;
using Rational = mpq_class;

/// Error with a stable machine-readable code (used by the CLI for JSON output).
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string detail)
        : std::runtime_error(code + ": " + detail),
          code_(std::move(code)),
          detail_(std::move(detail)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string code_;
    std::string detail_;
};

/// Parses "p/q" or "p". Throws on malformed input or zero denominator.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw Error("BadRational", "cannot parse rational '" + text + "'");
    if (r.get_den() == 0)
        throw Error("BadRational", "zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

/// Canonical string form: "p/q" with q > 0 and gcd(p,q)=1, or "p" when q=1.
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

/// r^e for a (possibly negative) machine-sized exponent; r must be nonzero
/// when e < 0.
inline Rational pow_rational(const Rational& r, long e) {
    if (e < 0 && r == 0)
        throw Error("DivisionByZero", "0 raised to a negative power");
    Rational base = e < 0 ? Rational(1) / r : r;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                            : static_cast<unsigned long>(e);
    Rational out = 1;
    Rational acc = base;
    while (n > 0) {
        if (n & 1) out *= acc;
        acc *= acc;
        n >>= 1;
    }
    return out;
}

/// r^e with an arbitrary-precision exponent. Exponents reached in practice
/// come from fundamental-basis decompositions and fit in a long.
inline Rational pow_rational(const Rational& r, const Int& e) {
    if (!e.fits_slong_p())
        throw Error("ExponentOverflow", "exponent does not fit in a machine word");
    return pow_rational(r, e.get_si());
}

} // namespace szz

#endif
