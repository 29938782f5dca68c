#pragma once

#include <compare>
#include <cstdint>
#include <utility>

namespace simtri {

/// a + b*w with w = exp(i*pi/3), so w^2 = w - 1 and conj(w) = 1 - w. Exact integer arithmetic.
struct EisensteinPoint {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend constexpr auto operator<=>(const EisensteinPoint&, const EisensteinPoint&) = default;

    friend constexpr EisensteinPoint operator+(EisensteinPoint x, EisensteinPoint y) { return {x.a + y.a, x.b + y.b}; }
    friend constexpr EisensteinPoint operator-(EisensteinPoint x, EisensteinPoint y) { return {x.a - y.a, x.b - y.b}; }
    friend constexpr EisensteinPoint operator*(EisensteinPoint x, EisensteinPoint y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }

    /// |a + b w|^2 = a^2 + ab + b^2.
    constexpr std::int64_t norm() const { return a * a + a * b + b * b; }
    constexpr EisensteinPoint conj() const { return {a + b, -b}; }
};

inline constexpr EisensteinPoint kOmega{0, 1};
inline constexpr EisensteinPoint kOneMinusOmega{1, -1};

/// The two points forming an equilateral triangle with u and v: u + (v-u)w and u + (v-u)(1-w).
constexpr std::pair<EisensteinPoint, EisensteinPoint> apexes(EisensteinPoint u, EisensteinPoint v) {
    const EisensteinPoint d = v - u;
    return {u + d * kOmega, u + d * kOneMinusOmega};
}

/// All three pairwise squared distances agree. Three coincident points count as equilateral.
constexpr bool is_equilateral(EisensteinPoint x, EisensteinPoint y, EisensteinPoint z) {
    const auto n1 = (x - y).norm();
    return n1 == (y - z).norm() && n1 == (z - x).norm();
}

} // namespace simtri
