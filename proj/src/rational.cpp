#include "gorenstein/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace gorenstein {

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer in rational literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9') {
            throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return BigInt(digits, 10);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
    value_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text), BigInt(1));
    const BigInt num = parse_integer(text.substr(0, slash));
    const BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::frac() const {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return Rational(r, value_.get_den());
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::size_t Rational::hash() const {
    const auto limb = [](const mpz_t z) -> std::size_t {
        return mpz_size(z) == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(z, 0));
    };
    std::size_t h = limb(value_.get_num_mpz_t()) * 0x9E3779B97F4A7C15ULL;
    h ^= limb(value_.get_den_mpz_t()) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    if (sgn(value_) < 0) h = ~h;
    return h;
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::int64_t to_int64(const BigInt& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer " + z.get_str() + " exceeds 64 bits");
    return static_cast<std::int64_t>(z.get_si());
}

}  // namespace gorenstein
