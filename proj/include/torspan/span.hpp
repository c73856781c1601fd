#pragma once

#include <algorithm>
#include <vector>

#include "torspan/rational.hpp"

namespace torspan {

/**
 * Length of the shortest closed arc of the circle Q/Z containing every
 * point of the input.  Empty and one-point sets have span 0; the value is
 * always in [0, 1).
 *
 * With the distinct residues sorted, the complement of the widest gap
 * between circularly adjacent points is the minimal covering arc, so the
 * span equals 1 minus that gap.
 */
inline Rational circular_span(std::vector<QmodZ> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 1)
        return Rational(0);

    Rational widest_gap(0);
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        widest_gap = std::max(widest_gap, points[i + 1].value() - points[i].value());
    // wraparound gap from the last point through 0 back to the first
    widest_gap = std::max(widest_gap,
                          points.front().value() + 1 - points.back().value());
    return Rational(1) - widest_gap;
}

} // namespace torspan
