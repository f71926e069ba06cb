#include "madgad/rational.hpp"

#include <ostream>

#include "madgad/errors.hpp"

namespace madgad {

mpz_class Rational::mpz_from(std::int64_t v) {
    mpz_class z;
    // mpz_class has no portable int64 constructor; go through the string form
    // only when the value does not fit a long.
    if (v >= static_cast<std::int64_t>(LONG_MIN) && v <= static_cast<std::int64_t>(LONG_MAX)) {
        z = static_cast<long>(v);
    } else {
        z = std::to_string(v);
    }
    return z;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(mpz_from(num), mpz_from(den));
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::from_integers(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    return Rational(mpq_class(num, den));
}

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpq_class(mpz_class(s)));
        const mpz_class num(s.substr(0, slash));
        const mpz_class den(s.substr(slash + 1));
        return from_integers(num, den);
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational: '" + s + "'");
    }
}

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

mpz_class Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

std::string Rational::to_string() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.q_ == 0) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace madgad
