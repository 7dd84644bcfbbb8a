#include "duval/rational.hpp"

#include <ostream>

namespace duval {

void Rational::canonicalize() {
    if (v_.get_den() == 0)
        throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    if (s.empty())
        throw std::invalid_argument("Rational::parse: empty string");
    const auto slash = s.find('/');
    auto check = [&](std::string_view part) {
        if (part.empty())
            throw std::invalid_argument("Rational::parse: bad input \"" + std::string(s) + "\"");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size())
            throw std::invalid_argument("Rational::parse: bad input \"" + std::string(s) + "\"");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw std::invalid_argument("Rational::parse: bad input \"" + std::string(s) + "\"");
    };
    auto strip_plus = [](std::string_view part) {
        return std::string(part[0] == '+' ? part.substr(1) : part);
    };
    if (slash == std::string_view::npos) {
        check(s);
        return Rational(mpz_class(strip_plus(s)));
    }
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    check(num);
    check(den);
    return Rational(mpz_class(strip_plus(num)), mpz_class(strip_plus(den)));
}

std::string Rational::str() const {
    if (is_integer())
        return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational& base, unsigned long exp) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), exp);
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace duval
