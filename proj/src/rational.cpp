#include "hcb/rational.hpp"

#include <cctype>

namespace hcb {

std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

static bool valid_int(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw InputError("bad rational: \"" + s + "\"");
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw InputError("bad rational: \"" + s + "\"");
    Int q(den);
    if (q == 0) throw InputError("bad rational (zero denominator): \"" + s + "\"");
    return Rat(Int(num), q);
}

}  // namespace hcb
