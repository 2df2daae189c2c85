#include "frostman/geometry.hpp"

#include <algorithm>

namespace frostman {

std::vector<DyadicSquare> supercover(const Segment& L, Scale scale) {
    std::vector<DyadicSquare> out;
    supercover_columns(L, scale, [&](std::int64_t i, std::int64_t jlo, std::int64_t jhi) {
        for (std::int64_t j = jlo; j <= jhi; ++j) out.push_back({scale.k, i, j});
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t supercover_count(const Segment& L, Scale scale) {
    std::uint64_t n = 0;
    supercover_columns(L, scale, [&](std::int64_t, std::int64_t jlo, std::int64_t jhi) {
        n += static_cast<std::uint64_t>(jhi - jlo + 1);
    });
    return n;
}

Interval project_square(const DyadicSquare& q, const Direction& d) {
    const Vec2 lo = q.lo(), hi = q.hi();
    const Vec2 corners[4] = {{lo.x, lo.y}, {hi.x, lo.y}, {lo.x, hi.y}, {hi.x, hi.y}};
    double mn = project_scalar(corners[0], d), mx = mn;
    for (int c = 1; c < 4; ++c) {
        const double v = project_scalar(corners[c], d);
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    return {mn, mx};
}

bool square_ball_intersects(const DyadicSquare& q, Vec2 x, double r) {
    return box_dist2(q.lo(), q.hi(), x) <= r * r;
}

bool segment_box_intersects(const Segment& L, Vec2 lo, Vec2 hi) {
    // Liang-Barsky clip of the closed segment against the closed box.
    const Vec2 d = L.b - L.a;
    double t0 = 0.0, t1 = 1.0;
    const double p[4] = {-d.x, d.x, -d.y, d.y};
    const double q[4] = {L.a.x - lo.x, hi.x - L.a.x, L.a.y - lo.y, hi.y - L.a.y};
    for (int s = 0; s < 4; ++s) {
        if (p[s] == 0.0) {
            if (q[s] < 0.0) return false;
        } else {
            const double t = q[s] / p[s];
            if (p[s] < 0.0) {
                if (t > t1) return false;
                t0 = std::max(t0, t);
            } else {
                if (t < t0) return false;
                t1 = std::min(t1, t);
            }
        }
    }
    return t0 <= t1;
}

double point_segment_dist(Vec2 x, const Segment& L) {
    const Vec2 d = L.b - L.a;
    const double len2 = d.norm2();
    if (len2 == 0.0) return (x - L.a).norm();
    double t = (x - L.a).dot(d) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return (x - (L.a + d * t)).norm();
}

double segment_segment_dist(const Segment& s1, const Segment& s2) {
    // Zero if they properly intersect, otherwise the min over endpoint-to-segment
    // distances.
    const auto orient = [](Vec2 a, Vec2 b, Vec2 c) {
        const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        return (v > 0.0) - (v < 0.0);
    };
    const int o1 = orient(s1.a, s1.b, s2.a), o2 = orient(s1.a, s1.b, s2.b);
    const int o3 = orient(s2.a, s2.b, s1.a), o4 = orient(s2.a, s2.b, s1.b);
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0) return 0.0;
    double best = point_segment_dist(s1.a, s2);
    best = std::min(best, point_segment_dist(s1.b, s2));
    best = std::min(best, point_segment_dist(s2.a, s1));
    best = std::min(best, point_segment_dist(s2.b, s1));
    return best;
}

}  // namespace frostman
