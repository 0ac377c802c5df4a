#include "pns/rational.hpp"

namespace pns {

Rat parse_rat(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty rational literal");

    auto parse_int = [&](std::string_view part, const char* what) -> Int {
        part = trim(part);
        if (part.empty()) throw std::invalid_argument(std::string("missing ") + what + " in rational literal");
        if (part[0] == '+') part.remove_prefix(1);  // GMP rejects an explicit plus
        std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
        if (i == part.size()) throw std::invalid_argument(std::string("malformed ") + what + " in rational literal");
        for (std::size_t k = i; k < part.size(); ++k)
            if (part[k] < '0' || part[k] > '9')
                throw std::invalid_argument("non-digit in rational literal: '" + std::string(part) + "'");
        return Int(std::string(part));
    };

    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text, "numerator"));
    Int num = parse_int(text.substr(0, slash), "numerator");
    Int den = parse_int(text.substr(slash + 1), "denominator");
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
    return Rat(num, den);
}

std::string rat_text(const Rat& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Int rat_floor(const Rat& r) {
    Int num = numerator(r);
    Int den = denominator(r);  // canonical: den > 0
    Int q = num / den;         // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

Int rat_ceil(const Rat& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    Int q = num / den;
    if (num > 0 && q * den != num) ++q;
    return q;
}

}  // namespace pns
