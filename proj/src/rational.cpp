#include "quadrant/rational.hpp"

#include "quadrant/error.hpp"

#include <cctype>

namespace quadrant {

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
    std::size_t slash = text.find('/');
    auto valid_integer = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t start = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        throw InputError("malformed rational '" + std::string(text) + "'");
    std::string num_text(num);
    if (!num_text.empty() && num_text[0] == '+') num_text.erase(0, 1);
    mpz_class n(num_text, 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InputError("rational with zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace quadrant
