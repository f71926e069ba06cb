#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace madgad {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class so that no floating point ever
/// enters a value-carrying path. Serializes as "num/den" (the denominator is
/// always printed, so 3 is "3/1").
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : q_(mpz_from(value)) {}
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class q);

    static Rational from_integers(const mpz_class& num, const mpz_class& den);

    /// Parses "a/b", "a" or "-a/b". Throws DomainError on malformed input.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    mpz_class floor() const;
    mpz_class ceil() const;

    /// Nearest double; for display only.
    double to_double() const { return q_.get_d(); }

    std::string to_string() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    static mpz_class mpz_from(std::int64_t v);
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational max(const Rational& a, const Rational& b);
Rational min(const Rational& a, const Rational& b);

/// Binomial coefficient C(n, 2) for non-negative n.
inline std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace madgad
