#include "zimin/numbers.hpp"

#include <cctype>
#include <stdexcept>

namespace zimin {

Int int_pow(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

Rat rat_qpow(int q, long exp) {
    if (q < 1) throw std::invalid_argument("rat_qpow: base must be >= 1");
    Int p = int_pow(static_cast<unsigned long>(q),
                    static_cast<unsigned long>(exp < 0 ? -exp : exp));
    Rat r = exp < 0 ? Rat(1, p) : Rat(p);
    r.canonicalize();
    return r;
}

Rat rat_pow(const Rat& x, long exp) {
    if (exp == 0) return Rat(1);
    if (x == 0 && exp < 0) throw std::domain_error("rat_pow: 0 to negative power");
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), e);
    Rat r = exp < 0 ? Rat(den, num) : Rat(num, den);
    r.canonicalize();
    return r;
}

std::string to_decimal(const Rat& v, int digits) {
    if (digits < 0) throw std::invalid_argument("to_decimal: digits must be >= 0");
    if (v < 0) throw std::invalid_argument("to_decimal: negative value");
    Int scale = int_pow(10, static_cast<unsigned long>(digits));
    Int num = v.get_num() * scale;
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), v.get_den_mpz_t());
    Int twice = 2 * r;
    int cmp = mpz_cmp(twice.get_mpz_t(), v.get_den_mpz_t());
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t())))
        q += 1;
    if (digits == 0) return q.get_str();
    Int ip, fp;
    mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), q.get_mpz_t(), scale.get_mpz_t());
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    return ip.get_str() + "." + frac;
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat r(s, 10);
        if (r.get_den() == 0) throw std::invalid_argument("rat_from_string: zero denominator");
        r.canonicalize();
        return r;
    }
    // [sign] digits [. digits] [e[sign]digits]
    std::string mant = s;
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        mant = s.substr(0, epos);
        exp10 = std::stol(s.substr(epos + 1));
    }
    bool neg = false;
    size_t i = 0;
    if (i < mant.size() && (mant[i] == '+' || mant[i] == '-')) {
        neg = mant[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < mant.size(); ++i) {
        if (mant[i] == '.') {
            if (seen_dot) throw std::invalid_argument("rat_from_string: bad number: " + s);
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(mant[i]))) {
            digits += mant[i];
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else {
            throw std::invalid_argument("rat_from_string: bad number: " + s);
        }
    }
    if (!seen_digit) throw std::invalid_argument("rat_from_string: bad number: " + s);
    Int m(digits.empty() ? std::string("0") : digits, 10);
    if (neg) m = -m;
    long e = exp10 - frac_digits;
    Rat r(m);
    if (e > 0)
        r *= Rat(int_pow(10, static_cast<unsigned long>(e)));
    else if (e < 0)
        r /= Rat(int_pow(10, static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

std::string to_fraction_string(const Rat& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

} // namespace zimin
