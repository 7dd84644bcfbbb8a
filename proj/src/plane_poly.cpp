#include "duval/plane_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace duval {

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
    const int da = a[0] + a[1] + a[2];
    const int db = b[0] + b[1] + b[2];
    if (da != db)
        return da > db;
    for (int v = 2; v >= 0; --v) {
        if (a[v] != b[v])
            return a[v] < b[v];
    }
    return false;
}

std::vector<Exponents> monomials_of_degree(int d) {
    if (d < 0)
        throw std::invalid_argument("monomials_of_degree: negative degree");
    std::vector<Exponents> out;
    out.reserve(static_cast<std::size_t>(d + 1) * (d + 2) / 2);
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j)
            out.push_back({i, j, d - i - j});
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

void PlanePoly::insert_term(const Exponents& e, const Rational& c) {
    if (c.is_zero())
        return;
    if (e[0] < 0 || e[1] < 0 || e[2] < 0)
        throw std::invalid_argument("PlanePoly: negative exponent");
    if (terms_.empty())
        degree_ = e[0] + e[1] + e[2];
    else if (e[0] + e[1] + e[2] != degree_)
        throw std::invalid_argument("PlanePoly: mixed total degrees");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

PlanePoly PlanePoly::monomial(const Exponents& e, const Rational& c) {
    PlanePoly p;
    p.insert_term(e, c);
    return p;
}

PlanePoly PlanePoly::from_coefficients(int degree, const std::vector<Rational>& coeffs) {
    const auto monos = monomials_of_degree(degree);
    if (coeffs.size() != monos.size())
        throw std::invalid_argument("PlanePoly::from_coefficients: wrong coefficient count");
    PlanePoly p;
    p.degree_ = degree;
    for (std::size_t i = 0; i < monos.size(); ++i)
        if (!coeffs[i].is_zero())
            p.terms_.emplace(monos[i], coeffs[i]);
    if (p.terms_.empty())
        p.degree_ = 0;
    return p;
}

Rational PlanePoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational PlanePoly::eval(const ProjPoint& pt) const {
    if (pt[0].is_zero() && pt[1].is_zero() && pt[2].is_zero())
        throw std::invalid_argument("PlanePoly::eval: zero projective triple");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int v = 0; v < 3; ++v)
            if (e[v] > 0)
                term *= pow(pt[v], static_cast<unsigned long>(e[v]));
        total += term;
    }
    return total;
}

PlanePoly PlanePoly::partial(int var) const {
    if (var < 0 || var > 2)
        throw std::invalid_argument("PlanePoly::partial: variable out of range");
    PlanePoly out;
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exponents de = e;
        de[var] -= 1;
        out.insert_term(de, c * Rational(e[var]));
    }
    return out;
}

PlanePoly PlanePoly::operator+(const PlanePoly& o) const {
    if (is_zero())
        return o;
    PlanePoly out = *this;
    for (const auto& [e, c] : o.terms_)
        out.insert_term(e, c);
    if (out.terms_.empty())
        out.degree_ = 0;
    return out;
}

PlanePoly PlanePoly::operator-(const PlanePoly& o) const {
    return *this + o.scaled(Rational(-1));
}

PlanePoly PlanePoly::operator*(const PlanePoly& o) const {
    PlanePoly out;
    if (is_zero() || o.is_zero())
        return out;
    out.degree_ = degree_ + o.degree_;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            out.insert_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    if (out.terms_.empty())
        out.degree_ = 0;
    return out;
}

PlanePoly PlanePoly::scaled(const Rational& c) const {
    PlanePoly out;
    if (c.is_zero())
        return out;
    out.degree_ = degree_;
    for (const auto& [e, coef] : terms_)
        out.terms_.emplace(e, coef * c);
    return out;
}

bool PlanePoly::operator==(const PlanePoly& o) const {
    if (is_zero() || o.is_zero())
        return is_zero() && o.is_zero();
    return degree_ == o.degree_ && terms_ == o.terms_;
}

std::string PlanePoly::str() const {
    if (is_zero())
        return "0";
    static const char* names[3] = {"X", "Y", "Z"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0)
            os << "-";
        first = false;
        const Rational a = abs(c);
        const bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
        if (a != Rational(1) || constant)
            os << a.str();
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0)
                continue;
            os << names[v];
            if (e[v] > 1)
                os << "^" << e[v];
        }
    }
    return os.str();
}

}  // namespace duval
