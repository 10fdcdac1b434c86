#include "moulton/rational.hpp"

#include <cctype>

namespace moulton {

static bool valid_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rat Rat::parse(const std::string& text) {
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_integer(num) || !valid_integer(den))
        throw ParseError("bad rational literal: " + text);
    mpz_class n(num), d(den);
    if (d == 0) throw ParseError("bad rational literal (zero denominator): " + text);
    return Rat(n, d);
}

std::string Rat::decimal(int digits) const {
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpz_class scaled = num() * scale / den(); // truncates toward zero for both signs
    bool neg = scaled < 0;
    mpz_class a = neg ? mpz_class(-scaled) : scaled;
    std::string s = a.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    // trim trailing zeros but keep at least one fractional digit rendered
    while (digits > 0 && s.back() == '0') { s.pop_back(); --digits; }
    if (!s.empty() && s.back() == '.') s.pop_back();
    return neg && a != 0 ? "-" + s : s;
}

} // namespace moulton
