#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace ptosc {

using Complex = std::complex<double>;

/// Complex 2-component column (or row) of amplitudes.
struct Vec2 {
    std::array<Complex, 2> c{};

    constexpr Complex& operator[](std::size_t i) { return c[i]; }
    constexpr const Complex& operator[](std::size_t i) const { return c[i]; }

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {{a[0] + b[0], a[1] + b[1]}}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {{a[0] - b[0], a[1] - b[1]}}; }
    friend Vec2 operator*(Complex s, const Vec2& v) { return {{s * v[0], s * v[1]}}; }
    friend Vec2 operator*(double s, const Vec2& v) { return {{s * v[0], s * v[1]}}; }
};

inline Vec2 conj(const Vec2& v) { return {{std::conj(v[0]), std::conj(v[1])}}; }

/// Euclidean norm.
inline double norm(const Vec2& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1])); }

/// Row-times-column contraction without conjugation.
inline Complex dot(const Vec2& row, const Vec2& col) { return row[0] * col[0] + row[1] * col[1]; }

/// Dense complex 2x2 matrix, row-major.
struct Mat2 {
    std::array<Complex, 4> a{};

    static constexpr Mat2 identity() { return Mat2{{1.0, 0.0, 0.0, 1.0}}; }
    static constexpr Mat2 diag(Complex d0, Complex d1) { return Mat2{{d0, 0.0, 0.0, d1}}; }

    constexpr Complex& operator()(std::size_t r, std::size_t c) { return a[2 * r + c]; }
    constexpr const Complex& operator()(std::size_t r, std::size_t c) const { return a[2 * r + c]; }

    Complex trace() const { return a[0] + a[3]; }
    Complex det() const { return a[0] * a[3] - a[1] * a[2]; }

    Mat2 transpose() const { return Mat2{{a[0], a[2], a[1], a[3]}}; }
    Mat2 adjoint() const {
        return Mat2{{std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}};
    }
    Mat2 inverse() const {
        const Complex d = det();
        return Mat2{{a[3] / d, -a[1] / d, -a[2] / d, a[0] / d}};
    }

    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return Mat2{{x.a[0] + y.a[0], x.a[1] + y.a[1], x.a[2] + y.a[2], x.a[3] + y.a[3]}};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return Mat2{{x.a[0] - y.a[0], x.a[1] - y.a[1], x.a[2] - y.a[2], x.a[3] - y.a[3]}};
    }
    friend Mat2 operator*(Complex s, const Mat2& m) {
        return Mat2{{s * m.a[0], s * m.a[1], s * m.a[2], s * m.a[3]}};
    }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2{{x(0, 0) * y(0, 0) + x(0, 1) * y(1, 0), x(0, 0) * y(0, 1) + x(0, 1) * y(1, 1),
                     x(1, 0) * y(0, 0) + x(1, 1) * y(1, 0), x(1, 0) * y(0, 1) + x(1, 1) * y(1, 1)}};
    }
    friend Vec2 operator*(const Mat2& m, const Vec2& v) {
        return {{m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]}};
    }
    /// Row vector times matrix.
    friend Vec2 operator*(const Vec2& row, const Mat2& m) {
        return {{row[0] * m(0, 0) + row[1] * m(1, 0), row[0] * m(0, 1) + row[1] * m(1, 1)}};
    }
};

/// |ket><bra| with the bra already conjugated.
inline Mat2 outer(const Vec2& ket, const Vec2& bra) {
    return Mat2{{ket[0] * bra[0], ket[0] * bra[1], ket[1] * bra[0], ket[1] * bra[1]}};
}

/// Largest entry modulus; the norm used for all entry-wise tolerances.
inline double max_abs(const Mat2& m) {
    double r = 0.0;
    for (const auto& x : m.a) r = std::max(r, std::abs(x));
    return r;
}

inline double max_abs_diff(const Mat2& x, const Mat2& y) { return max_abs(x - y); }

}  // namespace ptosc
