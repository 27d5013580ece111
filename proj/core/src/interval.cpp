#include "merger_er/interval.hpp"

#include <cmath>
#include <string>

#include "merger_er/error.hpp"

namespace merger_er {

Interval Interval::make(double lo, double hi) {
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
        throw Error(ErrorCode::NotAnInterval, "",
                    "interval requires lo <= hi, got [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    }
    return {lo, hi};
}

}  // namespace merger_er
