#pragma once

#include <complex>
#include <span>
#include <vector>

namespace anisogpe {

using cplx = std::complex<double>;

/// Gauss-Hermite rule in "function weight" form: sum_j weights[j] f(nodes[j])
/// integrates f exactly whenever f(z) = exp(-z^2) p(z) with deg p <= 2*order-1.
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussHermiteRule gauss_hermite_rule(int order);

/// Normalized Hermite functions chi_0(z) .. chi_{out.size()-1}(z) by the
/// three-term recurrence; stable well beyond the range where H_n(z) overflows.
void hermite_functions(double z, std::span<double> out);

/// Eigenbasis of H_z = -d^2/dz^2 / 2 + z^2 / 2 truncated to n_modes functions,
/// sampled on a Gauss-Hermite rule of quad_order >= n_modes nodes.
class HermiteBasis1D {
public:
    HermiteBasis1D(int n_modes, int quad_order);

    int n_modes() const noexcept { return n_modes_; }
    int quad_order() const noexcept { return static_cast<int>(nodes_.size()); }
    const std::vector<double>& nodes() const noexcept { return nodes_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }

    /// chi_n(z_j)
    double chi(int n, int j) const { return eval_table_[static_cast<std::size_t>(n) * quad_order() + j]; }

    /// Row-major n_modes x quad_order table of chi_n(z_j).
    const std::vector<double>& eval_table() const noexcept { return eval_table_; }
    /// Row-major n_modes x quad_order analysis matrix w_j chi_n(z_j).
    const std::vector<double>& analysis_table() const noexcept { return analysis_; }

private:
    int n_modes_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
    std::vector<double> eval_table_;
    std::vector<double> analysis_;
    std::vector<double> eigenvalues_;
};

/// Throws std::invalid_argument for n_modes < 1 or quad_order < n_modes.
HermiteBasis1D build_basis(int n_modes, int quad_order);

/// Nodal values (length quad_order) -> Hermite coefficients (length n_modes).
std::vector<cplx> hermite_forward(const HermiteBasis1D& basis, std::span<const cplx> values);
/// Hermite coefficients (length n_modes) -> nodal values (length quad_order).
std::vector<cplx> hermite_backward(const HermiteBasis1D& basis, std::span<const cplx> coeffs);

/// Applies the propagator exp(-i theta H_z): coefficient n picks up exp(-i theta (n + 1/2)).
void apply_exp_Hz(double theta, std::span<cplx> coeffs);

/// exp(-i theta (n + 1/2)) with the argument reduced mod 2 pi before evaluation.
cplx oscillator_phase(double theta, double level);

/// lambda * integral |chi_n(z)|^(2 sigma + 2) dz. Integer sigma: Gauss-Hermite
/// rule matched to the exp(-(sigma+1) z^2) envelope, exact once quad_order >=
/// (sigma + 1) n + 1. Otherwise Gauss-Legendre with quad_order points between
/// consecutive zeros of chi_n.
double kappa_n(int n, double sigma, double lambda, int quad_order = 0);

}  // namespace anisogpe
