#include "madgad/surd.hpp"

#include <cmath>

#include "madgad/errors.hpp"

namespace madgad {

Surd::Surd(Rational offset, Rational scale, mpz_class radicand)
    : offset_(std::move(offset)), scale_(std::move(scale)), radicand_(std::move(radicand)) {
    if (radicand_ < 0) throw DomainError("negative radicand");
}

int Surd::compare(const Rational& x) const {
    const Rational d = x - offset_;
    const int s = scale_.sign();
    if (s == 0 || radicand_ == 0) return -d.sign();
    // |scale| * sqrt(R) against |d|, decided by squaring.
    const mpq_class lhs = scale_.raw() * scale_.raw() * mpq_class(radicand_);
    const mpq_class rhs = d.raw() * d.raw();
    const int square_cmp = cmp(lhs, rhs) < 0 ? -1 : (cmp(lhs, rhs) > 0 ? 1 : 0);
    if (s > 0) return d.sign() < 0 ? 1 : square_cmp;
    return d.sign() > 0 ? -1 : -square_cmp;
}

Interval Surd::enclose(int bits) const {
    // Widen the precision by the magnitude of the scale so the final width
    // stays below 2^-bits.
    const mpz_class scale_ceil = abs(scale_.ceil()) + 1;
    const int total_bits = bits + static_cast<int>(mpz_sizeinbase(scale_ceil.get_mpz_t(), 2));
    const mpz_class shifted = radicand_ << (2 * total_bits);
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), shifted.get_mpz_t());
    const mpz_class denom = mpz_class(1) << total_bits;
    const Rational lo_root = Rational::from_integers(root, denom);
    const Rational hi_root = (root * root == shifted) ? lo_root : Rational::from_integers(root + 1, denom);
    Rational a = offset_ + scale_ * lo_root;
    Rational b = offset_ + scale_ * hi_root;
    if (b < a) std::swap(a, b);
    return {a, b};
}

double Surd::approx() const {
    return offset_.to_double() + scale_.to_double() * std::sqrt(radicand_.get_d());
}

std::string Surd::to_string() const {
    return offset_.to_string() + " + " + scale_.to_string() + "*sqrt(" + radicand_.get_str() + ")";
}

}  // namespace madgad
