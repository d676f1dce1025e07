#pragma once

// Small fixed-size complex matrices used throughout: 2x2 single-qubit and
// 4x4 pair operators. Value semantics, no allocation.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace gme {

using cplx = std::complex<double>;

template <std::size_t N>
using CMatrix = std::array<std::array<cplx, N>, N>;

using CMat2 = CMatrix<2>;
using CMat4 = CMatrix<4>;

template <std::size_t N>
constexpr CMatrix<N> zero_matrix() {
    return CMatrix<N>{};
}

template <std::size_t N>
constexpr CMatrix<N> identity_matrix() {
    CMatrix<N> m{};
    for (std::size_t i = 0; i < N; ++i) m[i][i] = cplx(1.0, 0.0);
    return m;
}

template <std::size_t N>
CMatrix<N> matmul(const CMatrix<N>& a, const CMatrix<N>& b) {
    CMatrix<N> out{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k) {
            const cplx aik = a[i][k];
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < N; ++j) out[i][j] += aik * b[k][j];
        }
    return out;
}

template <std::size_t N>
CMatrix<N> adjoint(const CMatrix<N>& a) {
    CMatrix<N> out{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out[i][j] = std::conj(a[j][i]);
    return out;
}

template <std::size_t N>
CMatrix<N> add(const CMatrix<N>& a, const CMatrix<N>& b) {
    CMatrix<N> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out[i][j] = a[i][j] + b[i][j];
    return out;
}

template <std::size_t N>
CMatrix<N> sub(const CMatrix<N>& a, const CMatrix<N>& b) {
    CMatrix<N> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out[i][j] = a[i][j] - b[i][j];
    return out;
}

template <std::size_t N>
CMatrix<N> scale(cplx f, const CMatrix<N>& a) {
    CMatrix<N> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out[i][j] = f * a[i][j];
    return out;
}

template <std::size_t N>
cplx trace(const CMatrix<N>& a) {
    cplx t{};
    for (std::size_t i = 0; i < N; ++i) t += a[i][i];
    return t;
}

template <std::size_t N>
double max_abs(const CMatrix<N>& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m = std::max(m, std::abs(a[i][j]));
    return m;
}

template <std::size_t N>
double max_abs_diff(const CMatrix<N>& a, const CMatrix<N>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

template <std::size_t N>
double frobenius(const CMatrix<N>& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) s += std::norm(a[i][j]);
    return std::sqrt(s);
}

// max |a_ij - conj(a_ji)|
template <std::size_t N>
double hermiticity_defect(const CMatrix<N>& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            m = std::max(m, std::abs(a[i][j] - std::conj(a[j][i])));
    return m;
}

// CSV block: one line per matrix row, each cell emitted as the two fields
// "re,im" (so an NxN matrix row has 2N comma-separated numbers).
template <std::size_t N>
std::string matrix_to_csv(const CMatrix<N>& a) {
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            std::snprintf(buf, sizeof(buf), "%.16e,%.16e", a[i][j].real(),
                          a[i][j].imag());
            if (j) out += ',';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

template <std::size_t N>
CMatrix<N> matrix_from_csv(const std::string& text) {
    CMatrix<N> m{};
    std::size_t pos = 0;
    auto next_number = [&]() {
        while (pos < text.size() && (text[pos] == ',' || text[pos] == '\n' ||
                                     text[pos] == ' ' || text[pos] == '\r'))
            ++pos;
        if (pos >= text.size())
            throw std::runtime_error("matrix_from_csv: truncated input");
        char* end = nullptr;
        double v = std::strtod(text.c_str() + pos, &end);
        if (end == text.c_str() + pos)
            throw std::runtime_error("matrix_from_csv: malformed number");
        pos = static_cast<std::size_t>(end - text.c_str());
        return v;
    };
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            double re = next_number();
            double im = next_number();
            m[i][j] = cplx(re, im);
        }
    return m;
}

}  // namespace gme
