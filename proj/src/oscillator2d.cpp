#include "anisogpe/oscillator2d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "anisogpe/errors.hpp"
#include "anisogpe/grid.hpp"

namespace anisogpe {

namespace {

// A_pm^dagger = (a1^dagger +- i a2^dagger)/sqrt(2), level n -> n + 1.
std::vector<cplx> raise_circular(int n, const std::vector<cplx>& c, int pm) {
    std::vector<cplx> out(n + 2);
    const double r = 1.0 / std::numbers::sqrt2;
    const cplx i_pm(0.0, pm);
    for (int a1 = 0; a1 <= n; ++a1) {
        const int a2 = n - a1;
        out[a1 + 1] += r * std::sqrt(a1 + 1.0) * c[a1];
        out[a1] += r * i_pm * std::sqrt(a2 + 1.0) * c[a1];
    }
    return out;
}

}  // namespace

std::vector<cplx> apply_Hx_level(int n, const std::vector<cplx>& coeffs) {
    if (static_cast<int>(coeffs.size()) != n + 1) throw std::invalid_argument("apply_Hx_level: size mismatch");
    std::vector<cplx> out(coeffs);
    for (auto& v : out) v *= n + 1.0;
    return out;
}

std::vector<cplx> apply_Lz_level(int n, const std::vector<cplx>& coeffs) {
    if (static_cast<int>(coeffs.size()) != n + 1) throw std::invalid_argument("apply_Lz_level: size mismatch");
    std::vector<cplx> out(n + 1);
    const cplx I(0.0, 1.0);
    for (int a1 = 0; a1 <= n; ++a1) {
        const int a2 = n - a1;
        if (a1 > 0) out[a1 - 1] += I * std::sqrt(a1 * (a2 + 1.0)) * coeffs[a1];
        if (a2 > 0) out[a1 + 1] -= I * std::sqrt(a2 * (a1 + 1.0)) * coeffs[a1];
    }
    return out;
}

Oscillator2DBasis::Oscillator2DBasis(int n_levels) : n_levels_(n_levels) {
    if (n_levels < 0) throw std::invalid_argument("Oscillator2DBasis: n_levels must be non-negative");
    // chains[np][nm] built by raising with A_+^dagger then A_-^dagger
    for (int n = 0; n <= n_levels; ++n) {
        for (int nm = n; nm >= 0; --nm) {
            const int np = n - nm;
            std::vector<cplx> c{1.0};
            int level = 0;
            for (int k = 0; k < np; ++k) c = raise_circular(level++, c, +1);
            for (int k = 0; k < nm; ++k) c = raise_circular(level++, c, -1);
            double f = 1.0;
            for (int k = 2; k <= np; ++k) f *= k;
            for (int k = 2; k <= nm; ++k) f *= k;
            const double s = 1.0 / std::sqrt(f);
            for (auto& v : c) v *= s;
            states_.push_back({n, np - nm, std::move(c)});
        }
    }
}

std::vector<const JointState*> Oscillator2DBasis::level(int n) const {
    std::vector<const JointState*> out;
    for (const auto& s : states_)
        if (s.n == n) out.push_back(&s);
    return out;
}

Oscillator2DBasis build_joint_basis(int n_levels) {
    Oscillator2DBasis basis(n_levels);
    for (const auto& s : basis.states()) {
        const auto lz = apply_Lz_level(s.n, s.coeffs);
        const auto hx = apply_Hx_level(s.n, s.coeffs);
        double err = 0.0, nrm = 0.0;
        for (int k = 0; k <= s.n; ++k) {
            err = std::max(err, std::abs(lz[k] - static_cast<double>(s.mu) * s.coeffs[k]));
            err = std::max(err, std::abs(hx[k] - Oscillator2DBasis::energy(s.n) * s.coeffs[k]));
            nrm += std::norm(s.coeffs[k]);
        }
        if (err > 1e-10 || std::abs(nrm - 1.0) > 1e-10)
            throw std::logic_error("build_joint_basis: eigen-relation check failed at level " + std::to_string(s.n));
    }
    return basis;
}

Eigen::MatrixXcd angular_momentum_block(int n, int per_axis_limit, int* first_a1) {
    if (n < 0 || per_axis_limit < 1) throw std::invalid_argument("angular_momentum_block: bad arguments");
    const int lo = std::max(0, n - per_axis_limit + 1);
    const int hi = std::min(n, per_axis_limit - 1);
    if (first_a1) *first_a1 = lo;
    const int m = std::max(0, hi - lo + 1);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m, m);
    for (int c = 0; c < m; ++c) {
        std::vector<cplx> e(n + 1);
        e[lo + c] = 1.0;
        const auto col = apply_Lz_level(n, e);
        for (int r = 0; r < m; ++r) out(r, c) = col[lo + r];
    }
    return out;
}

std::vector<double> ground_state_profile(const Grid3D& grid) {
    const auto& x1 = grid.x1().coordinates();
    const auto& x2 = grid.x2().coordinates();
    const auto& w1 = grid.x1().nodal_weights();
    const auto& w2 = grid.x2().nodal_weights();
    const double c = 1.0 / std::sqrt(std::numbers::pi);
    std::vector<double> out(x1.size() * x2.size());
    double nrm = 0.0;
    for (std::size_t i = 0; i < x1.size(); ++i)
        for (std::size_t j = 0; j < x2.size(); ++j) {
            const double v = c * std::exp(-0.5 * (x1[i] * x1[i] + x2[j] * x2[j]));
            out[i * x2.size() + j] = v;
            nrm += w1[i] * w2[j] * v * v;
        }
    if (std::abs(nrm - 1.0) > 1e-6)
        throw DomainTooSmall("ground_state_profile: transverse domain too small (norm deficit " +
                             std::to_string(std::abs(nrm - 1.0)) + ")");
    return out;
}

}  // namespace anisogpe
