#pragma once

#include <string>

namespace merger_er {

/// Locale-independent shortest representation with at most `digits`
/// significant digits ("0.9375", "1e-07", "-1.5"). Non-finite values map to
/// "inf", "-inf", "nan".
std::string format_significant(double value, int digits);

/// The double nearest to `value` printed with `digits` significant digits.
double round_significant(double value, int digits);

}  // namespace merger_er
