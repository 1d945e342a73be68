#include "kdelete/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace kdelete {

namespace {

const BigInt kScale = BigInt(1000000000000LL);

} // namespace

Rational e_lower() { return Rational(BigInt(2718281828459LL), kScale); }
Rational e_upper() { return Rational(BigInt(2718281828460LL), kScale); }

BigInt ipow(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

Rational rpow(const Rational& base, unsigned exponent) {
    return Rational(ipow(numerator(base), exponent), ipow(denominator(base), exponent));
}

BigInt iroot_floor(const BigInt& x, unsigned q) {
    if (x < 0) throw std::domain_error("root of a negative number");
    if (q == 0) throw std::domain_error("zeroth root");
    if (q == 1 || x < 2) return x;
    // Newton from above converges monotonically to the floor root.
    const unsigned bits = static_cast<unsigned>(msb(x)) + 1;
    BigInt y = BigInt(1) << ((bits + q - 1) / q);
    while (true) {
        BigInt next = ((q - 1) * y + x / ipow(y, q - 1)) / q;
        if (next >= y) break;
        y = next;
    }
    while (ipow(y, q) > x) --y;
    while (ipow(y + 1, q) <= x) ++y;
    return y;
}

Rational root_lower(const Rational& x, unsigned q) {
    if (x < 0) throw std::domain_error("root of a negative number");
    BigInt scaled = numerator(x) * ipow(kScale, q) / denominator(x);
    return Rational(iroot_floor(scaled, q), kScale);
}

Rational root_upper(const Rational& x, unsigned q) {
    if (x < 0) throw std::domain_error("root of a negative number");
    const BigInt num = numerator(x) * ipow(kScale, q);
    BigInt scaled = num / denominator(x);
    if (scaled * denominator(x) != num) ++scaled;
    BigInt r = iroot_floor(scaled, q);
    if (ipow(r, q) != scaled) ++r;
    return Rational(r, kScale);
}

std::string to_fraction_string(const Rational& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

Rational round_up_12(double x) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite value");
    // double carries ~16 significant digits; step one grid unit up to absorb
    // the rounding of the product itself
    const long double scaled = std::ceil(static_cast<long double>(x) * 1e12L);
    BigInt n(static_cast<long long>(scaled));
    return Rational(n + 1, kScale);
}

} // namespace kdelete
