#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace sepgeo {

template <int D>
struct Vec {
    static_assert(D >= 1 && D <= 3, "supported dimensions are 1..3");
    std::array<double, D> c{};

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    Vec operator+(const Vec& o) const {
        Vec r;
        for (int i = 0; i < D; ++i) r[i] = (*this)[i] + o[i];
        return r;
    }
    Vec operator-(const Vec& o) const {
        Vec r;
        for (int i = 0; i < D; ++i) r[i] = (*this)[i] - o[i];
        return r;
    }
    Vec operator*(double s) const {
        Vec r;
        for (int i = 0; i < D; ++i) r[i] = (*this)[i] * s;
        return r;
    }

    double dot(const Vec& o) const {
        double s = 0;
        for (int i = 0; i < D; ++i) s += (*this)[i] * o[i];
        return s;
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
};

template <int D>
inline double distance(const Vec<D>& a, const Vec<D>& b) {
    return (a - b).norm();
}

/// Closed segment between two points; a == b is a legal degenerate segment.
template <int D>
struct Segment {
    Vec<D> a, b;

    double length() const { return distance(a, b); }
    double diameter() const { return length(); }
    bool degenerate() const { return length() == 0.0; }

    Vec<D> midpoint() const { return (a + b) * 0.5; }

    Vec<D> point_at(double t) const { return a + (b - a) * t; }

    /// Unit direction (zero vector for degenerate segments).
    Vec<D> direction() const {
        Vec<D> d = b - a;
        double len = d.norm();
        if (len == 0.0) return Vec<D>{};
        return d * (1.0 / len);
    }
};

template <int D>
inline double point_segment_distance(const Vec<D>& p, const Segment<D>& s) {
    Vec<D> d = s.b - s.a;
    double len2 = d.norm2();
    if (len2 == 0.0) return distance(p, s.a);
    double t = std::clamp((p - s.a).dot(d) / len2, 0.0, 1.0);
    return distance(p, s.point_at(t));
}

/// Closest pair of points between two segments (parameters clamped to the
/// segments). Standard quadratic-minimization with boundary handling.
template <int D>
inline std::pair<Vec<D>, Vec<D>> segment_closest_points(const Segment<D>& s1,
                                                        const Segment<D>& s2) {
    const Vec<D> d1 = s1.b - s1.a;
    const Vec<D> d2 = s2.b - s2.a;
    const Vec<D> r = s1.a - s2.a;
    const double a = d1.norm2();
    const double e = d2.norm2();
    const double f = d2.dot(r);

    double s = 0.0, t = 0.0;
    if (a == 0.0 && e == 0.0) {
        // both degenerate
    } else if (a == 0.0) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else if (e == 0.0) {
        s = std::clamp(-d1.dot(r) / a, 0.0, 1.0);
    } else {
        const double b = d1.dot(d2);
        const double c = d1.dot(r);
        const double denom = a * e - b * b;
        if (denom != 0.0) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
        t = (b * s + f) / e;
        if (t < 0.0) {
            t = 0.0;
            s = std::clamp(-c / a, 0.0, 1.0);
        } else if (t > 1.0) {
            t = 1.0;
            s = std::clamp((b - c) / a, 0.0, 1.0);
        }
    }
    return {s1.point_at(s), s2.point_at(t)};
}

template <int D>
inline double segment_distance(const Segment<D>& s1, const Segment<D>& s2) {
    auto [p, q] = segment_closest_points(s1, s2);
    return distance(p, q);
}

/// Angle between segment directions, identified up to sign: range [0, pi/2].
template <int D>
inline double direction_angle(const Segment<D>& s1, const Segment<D>& s2) {
    double d = std::abs(s1.direction().dot(s2.direction()));
    return std::acos(std::clamp(d, -1.0, 1.0));
}

/// Closed interval on the line, lo <= hi.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double l, double h) : lo(std::min(l, h)), hi(std::max(l, h)) {}

    double length() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

    Segment<1> as_segment() const { return {{{lo}}, {{hi}}}; }
};

inline Interval to_interval(const Segment<1>& s) {
    return Interval(s.a[0], s.b[0]);
}

}  // namespace sepgeo
