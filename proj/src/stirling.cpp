#include "polyg/stirling.hpp"

#include <ostream>
#include <stdexcept>

namespace polyg {

MultiIndex MultiIndex::ones(int r)
{
    if (r < 0)
        throw std::invalid_argument("MultiIndex: negative depth");
    return MultiIndex(std::vector<int>(static_cast<size_t>(r), 1));
}

MultiIndex MultiIndex::parse(std::string_view s)
{
    if (s == "()")
        return MultiIndex();
    std::vector<int> entries;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string_view tok = s.substr(pos, comma == std::string_view::npos ? s.size() - pos
                                                                             : comma - pos);
        if (tok.empty())
            throw std::invalid_argument("MultiIndex: empty component in '" + std::string(s) + "'");
        size_t used = 0;
        int v;
        try {
            v = std::stoi(std::string(tok), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("MultiIndex: bad component '" + std::string(tok) + "'");
        }
        if (used != tok.size())
            throw std::invalid_argument("MultiIndex: bad component '" + std::string(tok) + "'");
        entries.push_back(v);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
        if (pos == s.size())
            throw std::invalid_argument("MultiIndex: trailing comma in '" + std::string(s) + "'");
    }
    return MultiIndex(std::move(entries));
}

bool MultiIndex::all_ones() const
{
    for (int k : entries)
        if (k != 1)
            return false;
    return true;
}

std::string MultiIndex::str() const
{
    std::string out = "(";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(entries[i]);
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& k)
{
    return os << k.str();
}

StirlingTables::StirlingTables(int n_max)
{
    s1_.push_back({Rational(1)});
    s2_.push_back({Rational(1)});
    ensure(n_max);
}

void StirlingTables::ensure(int n_max)
{
    for (int n = this->n_max(); n < n_max; ++n) {
        std::vector<Rational> row1(static_cast<size_t>(n) + 2), row2(static_cast<size_t>(n) + 2);
        for (int k = 0; k <= n + 1; ++k) {
            row1[k] = s1(n, k - 1) - Rational(n) * s1(n, k);
            row2[k] = Rational(k) * s2(n, k) + s2(n, k - 1);
        }
        s1_.push_back(std::move(row1));
        s2_.push_back(std::move(row2));
    }
}

Rational StirlingTables::s1(int n, int k) const
{
    if (n < 0 || n > n_max())
        throw std::out_of_range("StirlingTables: n beyond table");
    if (k < 0 || k > n)
        return Rational(0);
    return s1_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Rational StirlingTables::s2(int n, int k) const
{
    if (n < 0 || n > n_max())
        throw std::out_of_range("StirlingTables: n beyond table");
    if (k < 0 || k > n)
        return Rational(0);
    return s2_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

namespace {

// f_r(n) for n = 0..order by the chain DP; f_0 is the indicator of n = 0
// so that the empty multi-index yields the constant series 1.
std::vector<Rational> chain_dp(const MultiIndex& k, int order)
{
    std::vector<Rational> f(static_cast<size_t>(order) + 1);
    f[0] = Rational(1);
    for (int j = 0; j < k.depth(); ++j) {
        std::vector<Rational> g(static_cast<size_t>(order) + 1);
        Rational prefix(0); // sum_{i < m} f(i)
        for (int m = 0; m <= order; ++m) {
            if (m >= 1)
                g[m] = pow(Rational(m), -static_cast<long>(k.entries[j])) * prefix;
            prefix += f[m];
        }
        f = std::move(g);
    }
    return f;
}

} // namespace

Series multiple_log_coeffs(const MultiIndex& k, int order)
{
    std::vector<Rational> f = chain_dp(k, order);
    std::vector<BiPoly> coeffs;
    coeffs.reserve(f.size());
    for (const Rational& v : f)
        coeffs.push_back(BiPoly::constant(v));
    return Series(order, std::move(coeffs));
}

Series multiple_log_coeffs_by_series(const MultiIndex& k, int order)
{
    const Series one_minus_t =
        Series::constant(Rational(1), order) - Series::t_power(1, order);
    const Series strict_prefix = Series::t_power(1, order) * one_minus_t.invert();
    Series s = Series::constant(Rational(1), order);
    for (int j = 0; j < k.depth(); ++j) {
        s = s * strict_prefix;
        std::vector<BiPoly> weighted;
        weighted.reserve(static_cast<size_t>(order) + 1);
        weighted.push_back(s.coeff(0));
        for (int n = 1; n <= order; ++n)
            weighted.push_back(s.coeff(n) * pow(Rational(n), -static_cast<long>(k.entries[j])));
        s = Series(order, std::move(weighted));
    }
    return s;
}

Rational multi_stirling1(const MultiIndex& k, int n, int r_check)
{
    if (r_check != k.depth())
        throw std::invalid_argument("multi_stirling1: r does not match the multi-index depth");
    if (n < 0)
        throw std::invalid_argument("multi_stirling1: negative n");
    return multi_stirling1_row(k, n)[static_cast<size_t>(n)];
}

std::vector<Rational> multi_stirling1_row(const MultiIndex& k, int n_max)
{
    std::vector<Rational> f = chain_dp(k, n_max);
    Rational fact(1);
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0)
            fact *= Rational(n);
        f[static_cast<size_t>(n)] *= fact;
    }
    return f;
}

} // namespace polyg
