#include "polyg/bipoly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace polyg {

void BiPoly::add_term(const Key& key, const Rational& c)
{
    if (c.is_zero())
        return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

BiPoly BiPoly::constant(const Rational& c)
{
    return monomial(0, 0, c);
}

BiPoly BiPoly::monomial(int xdeg, int ldeg, const Rational& c)
{
    if (xdeg < 0 || ldeg < 0)
        throw std::invalid_argument("BiPoly: negative monomial degree");
    BiPoly p;
    p.add_term(Key{xdeg, ldeg}, c);
    return p;
}

bool BiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

Rational BiPoly::constant_value() const
{
    if (terms_.empty())
        return Rational(0);
    if (!is_constant())
        throw std::domain_error("BiPoly: not a constant: " + str());
    return terms_.begin()->second;
}

int BiPoly::degree_x() const
{
    int d = -1;
    for (const auto& [key, c] : terms_)
        d = std::max(d, key.xdeg);
    return d;
}

int BiPoly::degree_lambda() const
{
    int d = -1;
    for (const auto& [key, c] : terms_)
        d = std::max(d, key.ldeg);
    return d;
}

Rational BiPoly::coeff(int xdeg, int ldeg) const
{
    auto it = terms_.find(Key{xdeg, ldeg});
    return it == terms_.end() ? Rational(0) : it->second;
}

BiPoly BiPoly::operator-() const
{
    BiPoly r;
    for (const auto& [key, c] : terms_)
        r.terms_.emplace(key, -c);
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    for (const auto& [key, c] : o.terms_)
        add_term(key, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o)
{
    for (const auto& [key, c] : o.terms_)
        add_term(key, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_)
        v *= c;
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    BiPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(BiPoly::Key{ka.xdeg + kb.xdeg, ka.ldeg + kb.ldeg}, ca * cb);
    return r;
}

BiPoly BiPoly::substitute(const std::optional<Rational>& x_val,
                          const std::optional<Rational>& l_val) const
{
    BiPoly r;
    for (const auto& [key, c] : terms_) {
        Rational v = c;
        Key k = key;
        if (x_val) {
            v *= pow(*x_val, key.xdeg);
            k.xdeg = 0;
        }
        if (l_val) {
            v *= pow(*l_val, key.ldeg);
            k.ldeg = 0;
        }
        r.add_term(k, v);
    }
    return r;
}

BiPoly BiPoly::compose(const BiPoly& x_image, const BiPoly& l_image) const
{
    // Memoized images of x^i and lambda^j up to the degrees that occur.
    std::vector<BiPoly> xp{BiPoly::constant(Rational(1))};
    std::vector<BiPoly> lp{BiPoly::constant(Rational(1))};
    auto power = [](std::vector<BiPoly>& memo, const BiPoly& base, int e) -> const BiPoly& {
        while (static_cast<int>(memo.size()) <= e)
            memo.push_back(memo.back() * base);
        return memo[e];
    };
    BiPoly r;
    for (const auto& [key, c] : terms_)
        r += c * (power(xp, x_image, key.xdeg) * power(lp, l_image, key.ldeg));
    return r;
}

std::string BiPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Key, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        if (a.first.xdeg != b.first.xdeg)
            return a.first.xdeg > b.first.xdeg;
        return a.first.ldeg < b.first.ldeg;
    });
    std::string out;
    for (const auto& [key, c] : ts) {
        const bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        std::string mono;
        if (key.xdeg == 1)
            mono = "x";
        else if (key.xdeg > 1)
            mono = "x^" + std::to_string(key.xdeg);
        if (key.ldeg >= 1) {
            if (!mono.empty())
                mono += "*";
            mono += key.ldeg == 1 ? "lambda" : "lambda^" + std::to_string(key.ldeg);
        }
        std::string piece;
        if (mono.empty())
            piece = mag.str();
        else if (mag == Rational(1))
            piece = mono;
        else
            piece = mag.str() + "*" + mono;
        if (out.empty())
            out = neg ? "-" + piece : piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p)
{
    return os << p.str();
}

BiPoly lambda_falling_factorial(int n)
{
    if (n < 0)
        throw std::invalid_argument("lambda_falling_factorial: negative order");
    BiPoly p = BiPoly::constant(Rational(1));
    for (int j = 0; j < n; ++j)
        p = p * (BiPoly::var_x() - BiPoly::monomial(0, 1, Rational(j)));
    return p;
}

} // namespace polyg
