#include "apvdw/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace apvdw {

Rational make_rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    Rational q(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string strip_plus(std::string_view s)
{
    return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("not an exact rational (expected p/q): '" + std::string(text) + "'");
    }
    BigInt n(strip_plus(num));
    BigInt d{std::string(den)};
    if (d == 0) {
        throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value)
{
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

bool fits_int64(const BigInt& value)
{
    static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    return value >= lo && value <= hi;
}

std::int64_t to_int64(const BigInt& value)
{
    if (!fits_int64(value)) {
        throw std::overflow_error("integer does not fit in 64 bits: " + value.get_str());
    }
    return std::stoll(value.get_str());
}

BigInt ceil_div(const BigInt& num, const BigInt& den)
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

BigInt floor_div(const BigInt& num, const BigInt& den)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

BigInt ceil(const Rational& value) { return ceil_div(value.get_num(), value.get_den()); }
BigInt floor(const Rational& value) { return floor_div(value.get_num(), value.get_den()); }

Epsilon::Epsilon(Rational value) : value_(std::move(value))
{
    value_.canonicalize();
    if (value_ <= 0) {
        throw std::invalid_argument("epsilon must be positive, got " + to_string(value_));
    }
}

std::int64_t Epsilon::num() const
{
    if (value_.get_num() >= BigInt(1L << 31)) {
        throw std::overflow_error("epsilon numerator too large for integer search: " + to_string(value_));
    }
    return value_.get_num().get_si();
}

std::int64_t Epsilon::den() const
{
    if (value_.get_den() >= BigInt(1L << 31)) {
        throw std::overflow_error("epsilon denominator too large for integer search: " + to_string(value_));
    }
    return value_.get_den().get_si();
}

bool Epsilon::is_set_level() const { return value_ < Rational(1, 2); }

const Epsilon& Epsilon::require_set_level() const
{
    if (!is_set_level()) {
        throw std::domain_error("set-level recognition needs epsilon < 1/2 (indexing is ambiguous otherwise), got "
                                + to_string(value_));
    }
    return *this;
}

}  // namespace apvdw
