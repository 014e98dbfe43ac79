#include "mecs/rational.hpp"

#include <cctype>

namespace mecs {

namespace {

std::int64_t parse_int(const std::string& s, const std::string& context) {
    if (s.empty()) throw std::invalid_argument("empty number in " + context);
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad number '" + s + "' in " + context);
    }
    if (pos != s.size()) throw std::invalid_argument("bad number '" + s + "' in " + context);
    return v;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::int64_t p = parse_int(text.substr(0, slash), "rational");
        const std::int64_t q = parse_int(text.substr(slash + 1), "rational");
        if (q == 0) throw std::invalid_argument("rational with zero denominator: " + text);
        return Rational(p, q);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_int(text, "rational"));

    std::string head = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty()) return Rational(parse_int(head, "rational"));
    for (char c : frac) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("bad decimal '" + text + "'");
        }
    }
    if (frac.size() > 15) throw std::invalid_argument("decimal too long: " + text);

    bool negative = false;
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
        negative = head[0] == '-';
        head = head.substr(1);
    }
    const std::int64_t whole = head.empty() ? 0 : parse_int(head, "rational");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t num = whole * scale + parse_int(frac, "rational");
    return Rational(negative ? -num : num, scale);
}

}  // namespace mecs
