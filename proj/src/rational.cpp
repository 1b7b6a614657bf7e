#include "rainbow/rational.hpp"

#include <cctype>
#include <limits>

#include "rainbow/errors.hpp"

namespace rainbow {

Rational make_rational(long num, long den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    Rational q(num);
    q /= Rational(den);
    return q;  // mpq division keeps canonical form
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            BigInt num(text);
            return Rational(num);
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den <= 0) throw ParseError("denominator must be positive: " + text);
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational: " + text);
    }
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

BigInt ceil_rational(const Rational& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

bool fits_int64(const BigInt& z) {
    static const BigInt lo(std::numeric_limits<std::int64_t>::min());
    static const BigInt hi(std::numeric_limits<std::int64_t>::max());
    return z >= lo && z <= hi;
}

std::int64_t to_int64(const BigInt& z) {
    // mpz fits in a long on LP64; guarded by fits_int64
    return static_cast<std::int64_t>(z.get_si());
}

Rational pow_rational(const Rational& base, unsigned long exp) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exp);
    Rational q(num);
    q /= Rational(den);
    return q;
}

BigInt pow_bigint(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

}  // namespace rainbow
