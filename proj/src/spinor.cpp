#include "gme/spinor.hpp"

#include <stdexcept>

#include "gme/errors.hpp"

namespace gme {

namespace {

const cplx kI(0.0, 1.0);

CMat2 pauli(int k) {
    CMat2 s{};
    switch (k) {
        case 1:
            s[0][1] = 1.0;
            s[1][0] = 1.0;
            break;
        case 2:
            s[0][1] = -kI;
            s[1][0] = kI;
            break;
        case 3:
            s[0][0] = 1.0;
            s[1][1] = -1.0;
            break;
        default:
            throw std::out_of_range("pauli index");
    }
    return s;
}

// 4x4 from 2x2 blocks [[a, b], [c, d]].
CMat4 from_blocks(const CMat2& a, const CMat2& b, const CMat2& c, const CMat2& d) {
    CMat4 m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m[i][j] = a[i][j];
            m[i][j + 2] = b[i][j];
            m[i + 2][j] = c[i][j];
            m[i + 2][j + 2] = d[i][j];
        }
    return m;
}

GammaBasis build_dirac() {
    GammaBasis gb;
    gb.eta_diag = {1.0, -1.0, -1.0, -1.0};
    const CMat2 id2 = identity_matrix<2>();
    CMat2 zero2{};
    CMat2 neg_id2 = scale(cplx(-1.0), id2);
    gb.gamma[0] = from_blocks(id2, zero2, zero2, neg_id2);
    for (int k = 1; k <= 3; ++k) {
        const CMat2 sk = pauli(k);
        gb.gamma[k] = from_blocks(zero2, sk, scale(cplx(-1.0), sk), zero2);
    }
    return gb;
}

// I (x) sigma^3 acting on the four spinor components: diag(sigma3, sigma3).
CMat4 identity_tensor_sigma3() {
    const CMat2 s3 = pauli(3);
    CMat2 zero2{};
    return from_blocks(s3, zero2, zero2, s3);
}

// Rest-frame spinor with spin index r in {1,2}; unit normalisation.
std::array<cplx, 4> rest_spinor(int r) {
    if (r != 1 && r != 2) throw std::out_of_range("rest_spinor: spin index");
    std::array<cplx, 4> u{};
    u[r - 1] = 1.0;
    return u;
}

}  // namespace

const GammaBasis& GammaBasis::dirac() {
    static const GammaBasis gb = build_dirac();
    return gb;
}

const CMat4& gamma(int mu) {
    if (mu < 0 || mu > 3) throw std::out_of_range("gamma: index must be 0..3");
    return GammaBasis::dirac().gamma[static_cast<std::size_t>(mu)];
}

CMat4 sigma_tensor(int mu, int nu) {
    if (mu < 0 || mu > 3 || nu < 0 || nu > 3)
        throw std::out_of_range("sigma_tensor: index must be 0..3");
    const auto& gb = GammaBasis::dirac();
    // Lowered indices: gamma_mu = eta_mumu gamma^mu (diagonal metric).
    const CMat4 gmu = scale(cplx(gb.eta_diag[static_cast<std::size_t>(mu)]),
                            gb.gamma[static_cast<std::size_t>(mu)]);
    const CMat4 gnu = scale(cplx(gb.eta_diag[static_cast<std::size_t>(nu)]),
                            gb.gamma[static_cast<std::size_t>(nu)]);
    const CMat4 comm = sub(matmul(gmu, gnu), matmul(gnu, gmu));
    return scale(kI * 0.5, comm);
}

double bilinear_sigma3(int rprime, int r) {
    const std::array<cplx, 4> up = rest_spinor(rprime);
    const std::array<cplx, 4> u = rest_spinor(r);
    const CMat4 op = matmul(gamma(0), identity_tensor_sigma3());  // ubar = u^dag gamma^0
    cplx acc{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) acc += std::conj(up[i]) * op[i][j] * u[j];
    return acc.real();
}

double propagator_factor(PropagatorComponent c) {
    const auto& eta = GammaBasis::dirac().eta_diag;
    int mu = 0, nu = 0, mup = 0, nup = 0;
    if (c == PropagatorComponent::Transverse0303) {
        nu = 3;
        nup = 3;
    }
    auto e = [&](int a, int b) { return a == b ? eta[static_cast<std::size_t>(a)] : 0.0; };
    return -(e(mu, mup) * e(nu, nup) + e(mu, nup) * e(nu, mup) -
             e(mu, nu) * e(mup, nup));
}

void run_spinor_startup_checks() {
    const auto& gb = GammaBasis::dirac();
    const CMat4 id4 = identity_matrix<4>();
    for (int mu = 0; mu <= 3; ++mu)
        for (int nu = 0; nu <= 3; ++nu) {
            const CMat4 anti = add(matmul(gamma(mu), gamma(nu)),
                                   matmul(gamma(nu), gamma(mu)));
            const double expected = (mu == nu) ? 2.0 * gb.eta_diag[static_cast<std::size_t>(mu)] : 0.0;
            if (max_abs_diff(anti, scale(cplx(expected), id4)) > 1e-14)
                throw std::logic_error("spinor: Clifford algebra check failed");
        }
    if (bilinear_sigma3(1, 1) != 1.0 || bilinear_sigma3(2, 2) != -1.0 ||
        bilinear_sigma3(1, 2) != 0.0 || bilinear_sigma3(2, 1) != 0.0)
        throw std::logic_error("spinor: bilinear check failed");
    if (propagator_factor(PropagatorComponent::Static0000) != -1.0 ||
        propagator_factor(PropagatorComponent::Transverse0303) != 1.0)
        throw std::logic_error("spinor: propagator factor check failed");
}

}  // namespace gme
