#include "chern/rational.hpp"

#include <cctype>
#include <sstream>

#include "chern/errors.hpp"

namespace chern {

std::string to_string(const Rational& r) {
    std::ostringstream out;
    out << numerator(r);
    if (!is_integer(r))
        out << "/" << denominator(r);
    return out.str();
}

Rational parse_rational(const std::string& text) {
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos)
        throw ParseError("empty rational");
    std::string body = text.substr(begin, end - begin + 1);

    auto parse_int = [&](const std::string& s) -> Integer {
        if (s.empty())
            throw ParseError("bad rational '" + text + "'");
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            throw ParseError("bad rational '" + text + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw ParseError("bad rational '" + text + "'");
        return Integer(s);
    };

    size_t slash = body.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(body));
    Integer num = parse_int(body.substr(0, slash));
    Integer den = parse_int(body.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

Integer binomial(long n, long k) {
    if (k < 0 || n < k)
        return 0;
    Integer result = 1;
    for (long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return result;
}

Integer factorial(long n) {
    Integer result = 1;
    for (long i = 2; i <= n; ++i)
        result *= i;
    return result;
}

}  // namespace chern
