#include "fano95/rational.hpp"

namespace fano95 {

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            size_t pos = 0;
            std::int64_t n = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument("trailing characters");
            return Rational(n);
        }
        size_t pos = 0;
        std::int64_t n = std::stoll(text.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument("trailing characters");
        std::string den_text = text.substr(slash + 1);
        std::int64_t d = std::stoll(den_text, &pos);
        if (pos != den_text.size()) throw std::invalid_argument("trailing characters");
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse rational from '" + text + "'");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("rational out of 64-bit range: '" + text + "'");
    }
}

}  // namespace fano95
