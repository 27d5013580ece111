#pragma once

#include <cmath>
#include <string>

#include "json.hpp"
#include "merger_er/error.hpp"
#include "merger_er/format.hpp"
#include "merger_er/interval.hpp"
#include "merger_er/kulpa.hpp"

namespace merger_er::detail {

using Json = nlohmann::ordered_json;

/// JSON number with at most 15 significant digits; non-finite values become null.
inline Json number(double v) {
    if (!std::isfinite(v)) {
        return nullptr;
    }
    return round_significant(v, 15);
}

inline Json interval_json(const Interval& i) { return Json{{"lo", number(i.lo)}, {"hi", number(i.hi)}}; }

inline Json point_json(const KulpaPoint& p) { return Json::array({number(p.x), number(p.y)}); }

inline Json error_json(const Error& e) {
    return Json{{"code", std::string(to_string(e.code()))}, {"path", e.path()}, {"message", e.what()}};
}

}  // namespace merger_er::detail
