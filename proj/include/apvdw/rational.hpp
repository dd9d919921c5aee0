#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace apvdw {

// Canonical arbitrary-precision rational (gcd(num, den) == 1, den > 0).
// gmpxx keeps results of arithmetic canonical; construct through the
// helpers below so that literal inputs are canonical too.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Accepts "p/q" or "p" with optional sign. Decimal notation is rejected so
// that every epsilon entering the library is exact.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);  // always "p/q"
double to_double(const Rational& value);

bool fits_int64(const BigInt& value);
std::int64_t to_int64(const BigInt& value);  // throws std::overflow_error

BigInt ceil_div(const BigInt& num, const BigInt& den);
BigInt floor_div(const BigInt& num, const BigInt& den);
BigInt ceil(const Rational& value);
BigInt floor(const Rational& value);

// The tolerance parameter of the approximate progression definitions.
// Indexed recognition accepts any positive value; set-level operations call
// require_set_level() which additionally demands value < 1/2, where the
// balls around a + i*d are pairwise disjoint and sorted order is forced.
class Epsilon {
public:
    explicit Epsilon(Rational value);
    static Epsilon parse(std::string_view text) { return Epsilon(parse_rational(text)); }

    const Rational& value() const { return value_; }
    double as_double() const { return to_double(value_); }

    // Numerator and denominator as machine integers. Throws when they do
    // not fit below 2^31, the bound the integer fast paths are sized for.
    std::int64_t num() const;
    std::int64_t den() const;

    bool is_set_level() const;
    const Epsilon& require_set_level() const;

    friend bool operator==(const Epsilon& a, const Epsilon& b) { return a.value_ == b.value_; }

private:
    Rational value_;
};

}  // namespace apvdw
