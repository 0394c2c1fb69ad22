#include "picard/literal.hpp"

#include <algorithm>
#include <cctype>

namespace picard {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

bool is_rational_literal(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    bool digits = false, slash = false, slash_digits = false;
    for (; i < s.size(); i++) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            (slash ? slash_digits : digits) = true;
        } else if (s[i] == '/' && !slash && digits) {
            slash = true;
        } else {
            return false;
        }
    }
    return digits && (!slash || slash_digits);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = strip_spaces(text);
    if (!is_rational_literal(s)) throw std::invalid_argument("bad rational literal: " + text);
    if (s[0] == '+') s.erase(0, 1);  // GMP rejects an explicit plus
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

FieldElement parse_field_element(const std::string& text, long d) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty field-element literal");

    const std::string tail = "sqrt(-" + std::to_string(d) + ")";
    size_t any_sqrt = s.find("sqrt");
    if (any_sqrt == std::string::npos) return {d, parse_rational(s), Rational(0)};

    if (s.size() < tail.size() || s.compare(s.size() - tail.size(), tail.size(), tail) != 0)
        throw std::invalid_argument("radicand does not match the field in: " + text);
    std::string head = s.substr(0, s.size() - tail.size());
    if (head.find("sqrt") != std::string::npos)
        throw std::invalid_argument("bad field-element literal: " + text);

    // split into the real part and the sqrt coefficient
    std::string realpart, coef;
    if (!head.empty() && head.back() == '*') {
        head.pop_back();
        size_t cut = head.find_last_of("+-");
        while (cut != std::string::npos && cut > 0 && head[cut - 1] == '/')
            cut = head.find_last_of("+-", cut - 1);  // signs never follow '/'
        if (cut == std::string::npos || cut == 0) {
            coef = head;
        } else {
            realpart = head.substr(0, cut);
            coef = head.substr(cut);
        }
    } else {
        // implicit unit coefficient; head is "", "+", "-", or "real+" / "real-"
        if (head.empty() || head == "+") {
            coef = "1";
        } else if (head == "-") {
            coef = "-1";
        } else {
            char sign = head.back();
            if (sign != '+' && sign != '-')
                throw std::invalid_argument("bad field-element literal: " + text);
            realpart = head.substr(0, head.size() - 1);
            coef = (sign == '-') ? "-1" : "1";
        }
    }
    Rational re = realpart.empty() ? Rational(0) : parse_rational(realpart);
    return {d, re, parse_rational(coef)};
}

std::string format_field_element(const FieldElement& z) { return z.str(); }

}  // namespace picard
