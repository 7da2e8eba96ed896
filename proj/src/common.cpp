#include <cstdlib>
#include <string>

#include "causelab/errors.hpp"
#include "causelab/limits.hpp"
#include "causelab/rational.hpp"

namespace causelab {

Limits Limits::from_env() {
    Limits limits;
    if (const char* raw = std::getenv("CAUSELAB_BUDGET"); raw && *raw) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(raw, &end, 10);
        if (*end != '\0' || value == 0)
            throw ValidationError(std::string("CAUSELAB_BUDGET must be a positive integer, got '") +
                                  raw + "'");
        limits.max_sets = static_cast<std::size_t>(value);
    }
    return limits;
}

std::string to_string(const Rational& value) {
    if (value.denominator() == 1) return std::to_string(value.numerator());
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view part) -> std::int64_t {
        if (part.empty()) throw ParseError("malformed rational '" + std::string(text) + "'", 1, 1);
        std::int64_t v = 0;
        for (char c : part) {
            if (c < '0' || c > '9')
                throw ParseError("malformed rational '" + std::string(text) + "'", 1, 1);
            v = v * 10 + (c - '0');
        }
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 1, 1);
    return Rational(parse_int(text.substr(0, slash)), den);
}

} // namespace causelab
