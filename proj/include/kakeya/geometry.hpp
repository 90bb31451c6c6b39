#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace kakeya {

// The plane is identified with the complex plane.
using Point = std::complex<double>;

inline double cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(Point a, Point b) { return a.real() * b.real() + a.imag() * b.imag(); }

inline bool finite(Point p) { return std::isfinite(p.real()) && std::isfinite(p.imag()); }

// Wrap an angle into (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a <= -M_PI) a += 2.0 * M_PI;
    if (a > M_PI) a -= 2.0 * M_PI;
    return a;
}

inline Point unit_from_angle(double a) { return Point(std::cos(a), std::sin(a)); }

// Axis-aligned bounding box.
struct Box {
    double xmin = std::numeric_limits<double>::infinity();
    double ymin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();

    bool empty() const { return xmin > xmax || ymin > ymax; }

    void expand(Point p) {
        xmin = std::min(xmin, p.real());
        ymin = std::min(ymin, p.imag());
        xmax = std::max(xmax, p.real());
        ymax = std::max(ymax, p.imag());
    }

    void expand(const Box& b) {
        if (b.empty()) return;
        xmin = std::min(xmin, b.xmin);
        ymin = std::min(ymin, b.ymin);
        xmax = std::max(xmax, b.xmax);
        ymax = std::max(ymax, b.ymax);
    }

    Box inflated(double r) const { return Box{xmin - r, ymin - r, xmax + r, ymax + r}; }

    bool contains(const Box& b) const {
        return b.xmin >= xmin && b.ymin >= ymin && b.xmax <= xmax && b.ymax <= ymax;
    }

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
};

// Distance from p to the segment [a, b].
inline double segment_distance(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

// Union measure of a set of 1-D intervals.
inline double interval_union_measure(std::vector<std::pair<double, double>> iv) {
    if (iv.empty()) return 0.0;
    std::sort(iv.begin(), iv.end());
    double total = 0.0;
    double lo = iv.front().first, hi = iv.front().second;
    for (const auto& [a, b] : iv) {
        if (a > hi) {
            total += hi - lo;
            lo = a;
            hi = b;
        } else {
            hi = std::max(hi, b);
        }
    }
    total += hi - lo;
    return total;
}

// Convex hull (Andrew monotone chain); returns CCW hull without repeated last point.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Point> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

} // namespace kakeya
