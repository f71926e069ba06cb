#pragma once

#include <string>

#include "madgad/rational.hpp"

namespace madgad {

/// Closed rational interval [lo, hi].
struct Interval {
    Rational lo;
    Rational hi;
};

/// Real number offset + scale * sqrt(radicand) with rational offset/scale and
/// a non-negative integer radicand.
///
/// Comparisons against rationals are exact (integer squaring),
/// so strict inequalities involving square roots are decided soundly.
class Surd {
public:
    Surd(Rational offset, Rational scale, mpz_class radicand);

    static Surd sqrt_of(const mpz_class& radicand) { return Surd(Rational(0), Rational(1), radicand); }

    const Rational& offset() const { return offset_; }
    const Rational& scale() const { return scale_; }
    const mpz_class& radicand() const { return radicand_; }

    /// Sign of (this - x): -1, 0 or 1.
    int compare(const Rational& x) const;

    bool operator<(const Rational& x) const { return compare(x) < 0; }
    bool operator>(const Rational& x) const { return compare(x) > 0; }
    bool operator<=(const Rational& x) const { return compare(x) <= 0; }
    bool operator>=(const Rational& x) const { return compare(x) >= 0; }

    /// Rational interval containing the value, of width at most 2^-bits
    /// (bits >= 30 gives width below 1e-9).
    Interval enclose(int bits = 40) const;

    double approx() const;
    /// Human-readable form such as "-1/2 + 1/2*sqrt(41)".
    std::string to_string() const;

private:
    Rational offset_;
    Rational scale_;
    mpz_class radicand_;
};

}  // namespace madgad
