#include <indep/rational.hpp>
#include <indep/error.hpp>

#include <cmath>
#include <limits>

namespace indep
{
    namespace
    {
        auto is_digits(std::string_view s) -> bool
        {
            if (s.empty())
                return false;
            for (char c : s)
                if (c < '0' || c > '9')
                    return false;
            return true;
        }

        auto parse_integer(std::string_view s) -> BigInt
        {
            std::string_view digits = s;
            if (! digits.empty() && (digits[0] == '-' || digits[0] == '+'))
                digits.remove_prefix(1);
            if (! is_digits(digits))
                throw ParseError("not an integer: '" + std::string(s) + "'");
            BigInt z(std::string(digits), 10);
            return s[0] == '-' ? BigInt(-z) : z;
        }
    }

    auto parse_rational(std::string_view text) -> Rational
    {
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            BigInt num = parse_integer(text.substr(0, slash));
            std::string_view den_text = text.substr(slash + 1);
            if (! is_digits(den_text))
                throw ParseError("bad denominator in '" + std::string(text) + "'");
            BigInt den(std::string(den_text), 10);
            if (den == 0)
                throw ParseError("zero denominator in '" + std::string(text) + "'");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        if (auto dot = text.find('.'); dot != std::string_view::npos) {
            std::string_view frac = text.substr(dot + 1);
            if (! is_digits(frac))
                throw ParseError("bad decimal '" + std::string(text) + "'");
            std::string_view whole = text.substr(0, dot);
            bool negative = ! whole.empty() && whole[0] == '-';
            BigInt w = (whole.empty() || whole == "-" || whole == "+") ? BigInt(0) : parse_integer(whole);
            BigInt scale = pow(BigInt(10), frac.size());
            BigInt f(std::string(frac), 10);
            Rational q(negative ? BigInt(w * scale - f) : BigInt(w * scale + f), scale);
            q.canonicalize();
            return q;
        }
        return Rational(parse_integer(text));
    }

    auto to_string(const Rational & q) -> std::string
    {
        Rational c = q;
        c.canonicalize();
        return c.get_str(10);
    }

    auto to_string(const BigInt & z) -> std::string
    {
        return z.get_str(10);
    }

    auto pow(const Rational & base, unsigned long exponent) -> Rational
    {
        BigInt num, den;
        mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
        mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    auto pow(const BigInt & base, unsigned long exponent) -> BigInt
    {
        BigInt out;
        mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
        return out;
    }

    auto log2_of(const BigInt & z) -> double
    {
        if (z == 0)
            return -std::numeric_limits<double>::infinity();
        if (z < 0)
            return std::numeric_limits<double>::quiet_NaN();
        long exp = 0;
        double mantissa = mpz_get_d_2exp(&exp, z.get_mpz_t());
        return std::log2(mantissa) + static_cast<double>(exp);
    }

    auto log2_of(const Rational & q) -> double
    {
        if (q == 0)
            return -std::numeric_limits<double>::infinity();
        if (q < 0)
            return std::numeric_limits<double>::quiet_NaN();
        return log2_of(BigInt(q.get_num())) - log2_of(BigInt(q.get_den()));
    }
}
