#include "matpoly/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace matpoly {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Splits an optional leading sign off `s`, returning -1 or +1.
int take_sign(std::string_view& s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        int sign = s.front() == '-' ? -1 : 1;
        s.remove_prefix(1);
        return sign;
    }
    return 1;
}

[[noreturn]] void bad_number(std::string_view text) {
    throw parse_error("not a rational number: \"" + std::string(text) + "\"");
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw shape_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw shape_error("rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw shape_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(unsigned k) const {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    Rational out;
    out.v_ = mpq_class(num);
    out.v_ /= mpq_class(den);
    return out;
}

Rational Rational::from_string(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad_number(text);

    int sign = take_sign(s);

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_number(text);
        BigInt n(std::string(num)), d(std::string(den));
        if (d == 0) bad_number(text);
        Rational r(n, d);
        return sign < 0 ? -r : r;
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) bad_number(text);
        if (!ip.empty() && !all_digits(ip)) bad_number(text);
        if (!fp.empty() && !all_digits(fp)) bad_number(text);
        BigInt n = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        n *= scale;
        if (!fp.empty()) n += BigInt(std::string(fp));
        Rational r(n, scale);
        return sign < 0 ? -r : r;
    }

    if (!all_digits(s)) bad_number(text);
    Rational r(BigInt(std::string(s)), BigInt(1));
    return sign < 0 ? -r : r;
}

std::string Rational::str() const {
    std::string out = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        out += '/';
        out += v_.get_den().get_str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

std::string round_decimal_string(const Rational& r, int decimals) {
    if (decimals < 0) throw shape_error("negative decimal count");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));

    // n = round(|r| * 10^d), half away from zero.
    BigInt num = ::abs(r.numerator()) * scale;
    BigInt den = r.denominator();
    BigInt q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * rem >= den) q += 1;

    std::string digits = q.get_str();
    std::string out;
    if (r.sign() < 0 && q != 0) out += '-';
    if (decimals == 0) {
        out += digits;
        return out;
    }
    if (digits.size() <= static_cast<size_t>(decimals))
        digits.insert(0, static_cast<size_t>(decimals) + 1 - digits.size(), '0');
    out += digits.substr(0, digits.size() - decimals);
    out += '.';
    out += digits.substr(digits.size() - decimals);
    return out;
}

std::string decimal_or_fraction(const Rational& r) {
    BigInt den = r.denominator();
    unsigned long twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
    if (den != 1) return r.str();
    unsigned long places = twos > fives ? twos : fives;
    if (places == 0) return r.numerator().get_str();
    return round_decimal_string(r, static_cast<int>(places));
}

} // namespace matpoly
