#include "swfam/rational.hpp"

namespace swfam {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty())
        return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text))
            throw AlgebraError("Rational::parse: not a rational: '" + text + "'");
        return Rational(Int(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw AlgebraError("Rational::parse: not a rational: '" + text + "'");
    return Rational(Int(num), Int(den));
}

} // namespace swfam
