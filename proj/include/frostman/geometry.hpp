#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "frostman/errors.hpp"

namespace frostman {

// Dyadic scale delta = 2^-k. Grid arithmetic stays exact because every cell
// corner is a dyadic rational.
struct Scale {
    int k = 1;

    double delta() const { return std::ldexp(1.0, -k); }
    // 2^k as a double (exact for the k we ever use).
    double inv_delta() const { return std::ldexp(1.0, k); }
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
};

// Direction phi in [0, pi). Projections along phi and phi+pi are reflections
// of each other, so the half-circle carries all distinct projection data.
struct Direction {
    double phi = 0.0;

    Vec2 unit() const { return {std::cos(phi), std::sin(phi)}; }
    Vec2 normal() const { return {-std::sin(phi), std::cos(phi)}; }
};

// Angular distance modulo pi.
inline double angle_dist_mod_pi(double a, double b) {
    double d = std::fmod(std::fabs(a - b), 3.14159265358979323846);
    return std::min(d, 3.14159265358979323846 - d);
}

// Half-open square [i*2^-k,(i+1)*2^-k) x [j*2^-k,(j+1)*2^-k). All geometric
// predicates below use the closure.
struct DyadicSquare {
    int k = 1;
    std::int64_t i = 0;
    std::int64_t j = 0;

    double delta() const { return std::ldexp(1.0, -k); }
    Vec2 lo() const { return {static_cast<double>(i) * delta(), static_cast<double>(j) * delta()}; }
    Vec2 hi() const {
        return {static_cast<double>(i + 1) * delta(), static_cast<double>(j + 1) * delta()};
    }
    Vec2 center() const {
        return {(static_cast<double>(i) + 0.5) * delta(), (static_cast<double>(j) + 0.5) * delta()};
    }

    bool operator==(const DyadicSquare& o) const { return k == o.k && i == o.i && j == o.j; }
    bool operator<(const DyadicSquare& o) const {
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

struct Segment {
    Vec2 a;
    Vec2 b;

    double length() const { return (b - a).norm(); }
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
};

// All squares whose closed square intersects the closed segment. Corner
// touches count, so a segment through a lattice corner picks up all four
// incident cells.
std::vector<DyadicSquare> supercover(const Segment& L, Scale scale);

// |supercover(L, scale)| without materialising the cells.
std::uint64_t supercover_count(const Segment& L, Scale scale);

// Column-band representation of the closed supercover: for each grid column i
// the touched rows are the contiguous range [jlo, jhi]. Callback order is
// ascending in i.
template <class F>
void supercover_columns(const Segment& L, Scale scale, F&& emit) {
    const double g = scale.inv_delta();
    double ax = L.a.x * g, ay = L.a.y * g;
    double bx = L.b.x * g, by = L.b.y * g;
    if (ax > bx) {
        std::swap(ax, bx);
        std::swap(ay, by);
    }
    const auto imin = static_cast<std::int64_t>(std::ceil(ax)) - 1;
    const auto imax = static_cast<std::int64_t>(std::floor(bx));
    if (ax == bx) {
        const double ylo = std::min(ay, by), yhi = std::max(ay, by);
        const auto jlo = static_cast<std::int64_t>(std::ceil(ylo)) - 1;
        const auto jhi = static_cast<std::int64_t>(std::floor(yhi));
        for (std::int64_t i = imin; i <= imax; ++i) emit(i, jlo, jhi);
        return;
    }
    const double slope = (by - ay) / (bx - ax);
    double yl = ay;
    for (std::int64_t i = imin; i <= imax; ++i) {
        const double xr = std::min(bx, static_cast<double>(i + 1));
        const double yr = ay + (xr - ax) * slope;
        const double ylo = std::min(yl, yr), yhi = std::max(yl, yr);
        emit(i, static_cast<std::int64_t>(std::ceil(ylo)) - 1,
             static_cast<std::int64_t>(std::floor(yhi)));
        yl = yr;
    }
}

// x . (-sin phi, cos phi): the scalar coordinate of the orthogonal projection
// onto span(phi^perp). 1-Lipschitz in x.
inline double project_scalar(Vec2 x, const Direction& d) {
    const Vec2 n = d.normal();
    return x.dot(n);
}

// Exact [min, max] of project_scalar over the closed square (attained at
// corners; width = delta * (|sin| + |cos|)).
Interval project_square(const DyadicSquare& q, const Direction& d);

// Closed square vs closed ball B(x, r).
bool square_ball_intersects(const DyadicSquare& q, Vec2 x, double r);

// Distance^2 from point to a closed axis-aligned box.
inline double box_dist2(Vec2 lo, Vec2 hi, Vec2 x) {
    const double dx = std::max({lo.x - x.x, 0.0, x.x - hi.x});
    const double dy = std::max({lo.y - x.y, 0.0, x.y - hi.y});
    return dx * dx + dy * dy;
}

// Max distance^2 from point to a closed axis-aligned box (farthest corner).
inline double box_maxdist2(Vec2 lo, Vec2 hi, Vec2 x) {
    const double dx = std::max(std::fabs(lo.x - x.x), std::fabs(hi.x - x.x));
    const double dy = std::max(std::fabs(lo.y - x.y), std::fabs(hi.y - x.y));
    return dx * dx + dy * dy;
}

// Closed segment vs closed axis-aligned box.
bool segment_box_intersects(const Segment& L, Vec2 lo, Vec2 hi);

// Distance from point to closed segment.
double point_segment_dist(Vec2 x, const Segment& L);

// Distance between two closed segments.
double segment_segment_dist(const Segment& a, const Segment& b);

}  // namespace frostman
