#include "gme/state.hpp"

#include <string>

#include "gme/jacobi.hpp"

namespace gme {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigFloor = -1e-10;  // round-off allowance from RK4 steps

template <std::size_t N>
void validate_matrix(const CMatrix<N>& m, const char* what) {
    if (hermiticity_defect(m) > kHermTol)
        throw InvalidState(std::string(what) + ": not Hermitian");
    const cplx t = trace(m);
    if (std::abs(t - cplx(1.0, 0.0)) > kTraceTol)
        throw InvalidState(std::string(what) + ": trace != 1");
    const auto eig = jacobi_hermitian(m);
    if (eig.values.back() < kEigFloor)
        throw InvalidState(std::string(what) + ": negative eigenvalue " +
                           std::to_string(eig.values.back()));
}

}  // namespace

void validate(const QubitState2& s) { validate_matrix(s.m, "QubitState2"); }

void validate(const PairState4& s) { validate_matrix(s.m, "PairState4"); }

PairState4 tensor(const QubitState2& a, const QubitState2& b) {
    validate(a);
    validate(b);
    PairState4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    out.m[2 * i + k][2 * j + l] = a.m[i][j] * b.m[k][l];
    return out;
}

QubitState2 partial_trace_B(const PairState4& p) {
    QubitState2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            cplx acc{};
            for (int k = 0; k < 2; ++k) acc += p.m[2 * i + k][2 * j + k];
            out.m[i][j] = acc;
        }
    return out;
}

CMat4 partial_transpose_B(const PairState4& p) {
    CMat4 out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    out[2 * i + k][2 * j + l] = p.m[2 * i + l][2 * j + k];
    return out;
}

double purity(const PairState4& p) {
    return trace(matmul(p.m, p.m)).real();
}

}  // namespace gme
