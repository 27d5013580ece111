#include "merger_er/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace merger_er {

std::string format_significant(double value, int digits) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    if (value == 0.0) {
        return "0";  // also folds -0
    }
    std::array<char, 64> buf{};
    const auto result =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, digits);
    return std::string(buf.data(), result.ptr);
}

double round_significant(double value, int digits) {
    if (!std::isfinite(value)) {
        return value;
    }
    const std::string text = format_significant(value, digits);
    double out = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

}  // namespace merger_er
