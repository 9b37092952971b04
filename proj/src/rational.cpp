#include "cantorgap/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cantorgap {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        if ((a >> 64) == 0 && (b >> 64) == 0) {
            return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        }
        a %= b;
        std::swap(a, b);
    }
    return a;
}

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

void set_mpz(mpz_class& out, i128 v) {
    const u128 mag = uabs(v);
    const std::uint64_t words[2] = {static_cast<std::uint64_t>(mag),
                                    static_cast<std::uint64_t>(mag >> 64)};
    mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
    if (v < 0) out = -out;
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {
    if (value == std::numeric_limits<std::int64_t>::min()) {
        *this = Rational(mpq_class(mpz_class(static_cast<long>(value))));
    }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& value) {
    mpq_class v(value);
    v.canonicalize();
    if (mpz_fits_slong_p(v.get_num_mpz_t()) && mpz_fits_slong_p(v.get_den_mpz_t())) {
        const long n = v.get_num().get_si();
        if (n != std::numeric_limits<long>::min()) {
            num_ = n;
            den_ = v.get_den().get_si();
            return;
        }
    }
    big_ = std::make_shared<const mpq_class>(std::move(v));
}

Rational Rational::from_i128(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const u128 g = gcd_u128(uabs(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    Rational r;
    if (fits(num) && den <= kMax) {
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    mpq_class q;
    set_mpz(q.get_num(), num);
    set_mpz(q.get_den(), den);
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::string s(text);
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') return false;
        }
        return true;
    };
    const std::string num_part = s.substr(0, slash);
    const std::string den_part = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num_part) || !valid_int(den_part) || den_part[0] == '-' || den_part[0] == '+') {
        throw std::invalid_argument("malformed rational literal \"" + s + "\"");
    }
    mpz_class n(num_part[0] == '+' ? num_part.substr(1) : num_part, 10);
    mpz_class d(den_part, 10);
    if (d == 0) throw std::invalid_argument("rational literal \"" + s + "\" has zero denominator");
    return Rational(mpq_class(n, d));
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
}

std::string Rational::numerator_str() const {
    return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_str() const {
    return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

std::string Rational::str() const { return numerator_str() + "/" + denominator_str(); }

double Rational::to_double() const {
    return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_decimal(int significant_digits) const {
    if (significant_digits < 1) significant_digits = 1;
    if (is_zero()) return "0";
    const mpq_class v = to_mpq();
    const bool negative = sgn(v) < 0;
    const mpz_class num = ::abs(v.get_num());
    const mpz_class den = v.get_den();

    // Pick k so that 10^(sig-1) <= |v| * 10^k < 10^sig.
    long k = static_cast<long>(significant_digits) - 1 -
             static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) +
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
    mpz_class lo_bound, hi_bound;
    mpz_ui_pow_ui(lo_bound.get_mpz_t(), 10, static_cast<unsigned long>(significant_digits - 1));
    hi_bound = lo_bound * 10;
    auto scaled_floor = [&](long shift) {
        mpz_class p10;
        mpz_class q;
        if (shift >= 0) {
            mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
            q = num * p10 / den;
        } else {
            mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
            q = num / (den * p10);
        }
        return q;
    };
    for (int guard = 0; guard < 8; ++guard) {
        const mpz_class f = scaled_floor(k);
        if (f < lo_bound) {
            ++k;
        } else if (f >= hi_bound) {
            --k;
        } else {
            break;
        }
    }
    // Round half away from zero: floor(|v| * 10^k + 1/2).
    mpz_class p10;
    mpq_class scaled;
    if (k >= 0) {
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(k));
        scaled = mpq_class(num * p10, den);
    } else {
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(-k));
        scaled = mpq_class(num, den * p10);
    }
    scaled.canonicalize();
    scaled += mpq_class(1, 2);
    mpz_class mantissa = scaled.get_num() / scaled.get_den();

    std::string digits = mantissa.get_str();
    std::string out;
    if (k <= 0) {
        out = digits + std::string(static_cast<std::size_t>(-k), '0');
    } else {
        if (static_cast<long>(digits.size()) <= k) {
            digits = std::string(static_cast<std::size_t>(k) - digits.size() + 1, '0') + digits;
        }
        const std::size_t point = digits.size() - static_cast<std::size_t>(k);
        out = digits.substr(0, point) + "." + digits.substr(point);
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return negative ? "-" + out : out;
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

Rational Rational::operator-() const {
    if (!big_) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    return Rational(mpq_class(-*big_));
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == b.den_) {
            return Rational::from_i128(static_cast<i128>(a.num_) + b.num_, a.den_);
        }
        return Rational::from_i128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                                   static_cast<i128>(a.den_) * b.den_);
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == b.den_) {
            return Rational::from_i128(static_cast<i128>(a.num_) - b.num_, a.den_);
        }
        return Rational::from_i128(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                                   static_cast<i128>(a.den_) * b.den_);
    }
    return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
}

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        return Rational::from_i128(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    if (!a.big_ && !b.big_) {
        return Rational::from_i128(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
    }
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        const i128 lhs = static_cast<i128>(a.num_) * b.den_;
        const i128 rhs = static_cast<i128>(b.num_) * a.den_;
        return lhs < rhs ? std::strong_ordering::less
                         : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) {
        if (!a.big_ || !b.big_) return false;  // canonical storage
        return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::size_t Rational::hash() const {
    if (big_) return std::hash<std::string>{}(str());
    const std::size_t h1 = std::hash<std::int64_t>{}(num_);
    const std::size_t h2 = std::hash<std::int64_t>{}(den_);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exp) {
    Rational result(1);
    Rational b = base;
    while (exp > 0) {
        if (exp & 1U) result *= b;
        exp >>= 1U;
        if (exp > 0) b *= b;
    }
    return result;
}

}  // namespace cantorgap
