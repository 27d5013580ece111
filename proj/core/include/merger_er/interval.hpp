#pragma once

#include <algorithm>
#include <optional>

namespace merger_er {

/// Closed real interval [lo, hi]. A singleton has lo == hi.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    /// Throws Error(NotAnInterval) unless lo <= hi.
    static Interval make(double lo, double hi);
    static Interval singleton(double value) { return {value, value}; }

    bool is_singleton() const noexcept { return lo == hi; }
    bool contains(double value) const noexcept { return lo <= value && value <= hi; }
    double midpoint() const noexcept { return 0.5 * (lo + hi); }
    double radius() const noexcept { return 0.5 * (hi - lo); }
    double width() const noexcept { return hi - lo; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// [max(a.lo, b.lo), min(a.hi, b.hi)] when non-empty.
inline std::optional<Interval> intersect(const Interval& a, const Interval& b) noexcept {
    const double lo = std::max(a.lo, b.lo);
    const double hi = std::min(a.hi, b.hi);
    if (lo > hi) {
        return std::nullopt;
    }
    return Interval{lo, hi};
}

}  // namespace merger_er
