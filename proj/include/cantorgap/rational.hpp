#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cantorgap {

// Exact rational number in canonical form (den > 0, gcd(|num|, den) = 1).
//
// Values whose numerator and denominator both fit in int64 are stored
// inline and handled with 128-bit intermediates; everything else lives in
// a shared, immutable GMP rational. The representation is canonical: a
// value is stored as big only when it does not fit the inline form, so
// structural equality is value equality.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT: implicit integer promotion is intended
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& value);

    // Accepts "p/q", "p" and an optional leading sign. Throws
    // std::invalid_argument on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    // Canonical "p/q" ("p" is never emitted; integers serialize as "p/1").
    std::string str() const;
    // Decimal rendering with the given number of significant digits,
    // rounded half away from zero. Non-authoritative, for plotting.
    std::string to_decimal(int significant_digits = 20) const;
    double to_double() const;

    mpq_class to_mpq() const;

    int sign() const;
    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_small() const { return !big_; }

    std::string numerator_str() const;
    std::string denominator_str() const;

    Rational operator-() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    // Throws std::domain_error on division by zero.
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b);

    std::size_t hash() const;

private:
    static Rational from_i128(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// base^exp for exp >= 0.
Rational pow(const Rational& base, unsigned exp);

}  // namespace cantorgap

template <>
struct std::hash<cantorgap::Rational> {
    std::size_t operator()(const cantorgap::Rational& r) const noexcept { return r.hash(); }
};
