#include "skewmm/rational.hpp"

#include "skewmm/errors.hpp"

namespace skewmm {

Rational inverse(const Rational& x)
{
    if (is_zero(x))
        throw DivisionByZero("inverse of rational zero");
    Rational r;
    mpq_inv(r.get_mpq_t(), x.get_mpq_t());
    return r;
}

std::string to_string(const Rational& x)
{
    return x.get_str(10);
}

namespace {

// Nonempty decimal digits without a leading zero, or exactly "0".
bool canonical_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char ch : s)
        if (ch < '0' || ch > '9')
            return false;
    return s.size() == 1 || s.front() != '0';
}

}  // namespace

std::optional<Rational> parse_canonical_rational(std::string_view text)
{
    bool negative = false;
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!canonical_digits(num))
        return std::nullopt;
    if (negative && num == "0")
        return std::nullopt;
    if (slash != std::string_view::npos && (!canonical_digits(den) || den == "0" || den == "1"))
        return std::nullopt;

    mpz_class n(std::string(num), 10);
    mpz_class d(1);
    if (slash != std::string_view::npos)
        d = mpz_class(std::string(den), 10);
    if (n == 0 && slash != std::string_view::npos)
        return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1)
        return std::nullopt;
    if (negative)
        n = -n;
    return Rational(n, d);
}

}  // namespace skewmm
