#include "ctri/rational.hpp"

#include <cctype>
#include <ostream>

namespace ctri {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i >= s.size()) throw std::invalid_argument("rational: sign only: " + s);
    bool seen_slash = false;
    for (std::size_t j = i; j < s.size(); ++j) {
        char c = s[j];
        if (c == '/') {
            if (seen_slash || j + 1 == s.size() || j == i)
                throw std::invalid_argument("rational: malformed: " + s);
            seen_slash = true;
            if (s[j + 1] == '-' || s[j + 1] == '+')
                throw std::invalid_argument("rational: signed denominator: " + s);
        } else if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("rational: malformed: " + s);
        }
    }
    mpq_class q(s, 10);
    if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator: " + s);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
    mpz_class n = v_.get_num();
    mpz_class d = v_.get_den();
    bool neg = n < 0;
    if (neg) n = -n;
    mpz_class ip = n / d;
    mpz_class rem = n % d;
    std::string out = (neg && (ip != 0 || rem != 0)) ? "-" : "";
    out += ip.get_str();
    if (digits > 0 && rem != 0) {
        out += '.';
        for (int i = 0; i < digits && rem != 0; ++i) {
            rem *= 10;
            mpz_class digit = rem / d;
            rem %= d;
            out += static_cast<char>('0' + digit.get_si());
        }
    }
    return out;
}

std::size_t Rational::bit_length() const {
    mpz_class n = v_.get_num();
    mpz_class d = v_.get_den();
    std::size_t bn = (n == 0) ? 1 : mpz_sizeinbase(n.get_mpz_t(), 2);
    std::size_t bd = mpz_sizeinbase(d.get_mpz_t(), 2);
    return bn > bd ? bn : bd;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ctri
