#include "sepline/rational.hpp"

#include <cctype>

namespace sepline {

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (den.find('/') != std::string_view::npos)
            throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    if (!is_integer_text(num) || (!den.empty() && !is_integer_text(den)) ||
        (text.find('/') != std::string_view::npos && den.empty()))
        throw ParseError("malformed rational: '" + std::string(text) + "'");

    Integer n(std::string(num), 10);
    Integer d = den.empty() ? Integer(1) : Integer(std::string(den), 10);
    if (sgn(d) == 0)
        throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_to_decimal(const Rational& q, int significant_digits) {
    if (sgn(q) == 0) return "0";
    const bool negative = sgn(q) < 0;
    Integer p = abs(q.get_num());
    const Integer& d = q.get_den();

    Integer int_part, rem;
    mpz_tdiv_qr(int_part.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), d.get_mpz_t());

    std::string digits;
    int significant = 0;
    std::string head = int_part.get_str();
    if (head != "0") {
        digits = head;
        significant = static_cast<int>(head.size());
    }

    std::string frac;
    bool leading_zeros = digits.empty();
    while (sgn(rem) != 0 && significant < significant_digits) {
        rem *= 10;
        Integer digit, next_rem;
        mpz_tdiv_qr(digit.get_mpz_t(), next_rem.get_mpz_t(), rem.get_mpz_t(), d.get_mpz_t());
        rem = next_rem;
        char c = static_cast<char>('0' + digit.get_si());
        frac.push_back(c);
        if (leading_zeros && c == '0') continue;
        leading_zeros = false;
        ++significant;
    }

    std::string out = digits.empty() ? "0" : digits;
    if (!frac.empty()) {
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    }
    return negative ? "-" + out : out;
}

}  // namespace sepline
