#include "anisogpe/hermite.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace anisogpe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// chi_{order-1}(x) and chi_order(x) by the normalized recurrence.
std::pair<double, double> top_pair(int order, double x) {
    double prev = 0.0;
    double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    for (int n = 0; n < order; ++n) {
        const double next = std::sqrt(2.0 / (n + 1)) * x * cur - std::sqrt(static_cast<double>(n) / (n + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return {prev, cur};
}

}  // namespace

void hermite_functions(double z, std::span<double> out) {
    if (out.empty()) return;
    out[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * z * z);
    if (out.size() == 1) return;
    out[1] = std::sqrt(2.0) * z * out[0];
    for (std::size_t n = 1; n + 1 < out.size(); ++n) {
        const double nn = static_cast<double>(n);
        out[n + 1] = std::sqrt(2.0 / (nn + 1.0)) * z * out[n] - std::sqrt(nn / (nn + 1.0)) * out[n - 1];
    }
}

GaussHermiteRule gauss_hermite_rule(int order) {
    if (order < 1) throw std::invalid_argument("gauss_hermite_rule: order must be >= 1");

    // Golub-Welsch for the weight exp(-z^2): Jacobi matrix with off-diagonal sqrt(n/2).
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
    Eigen::VectorXd sub(std::max(order - 1, 0));
    for (int n = 1; n < order; ++n) sub(n - 1) = std::sqrt(0.5 * n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

    GaussHermiteRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int j = 0; j < order; ++j) {
        double x = solver.eigenvalues()(j);
        // Newton polish on chi_order, whose derivative at a root is sqrt(2 order) chi_{order-1}.
        for (int it = 0; it < 8; ++it) {
            const auto [lo, hi] = top_pair(order, x);
            const double deriv = std::sqrt(2.0 * order) * lo - x * hi;
            if (deriv == 0.0) break;
            const double dx = hi / deriv;
            x -= dx;
            if (std::abs(dx) <= 1e-16 * std::max(1.0, std::abs(x))) break;
        }
        const double below = top_pair(order, x).first;
        rule.nodes[j] = x;
        rule.weights[j] = 1.0 / (order * below * below);
    }
    // Symmetrize: the rule is exactly even.
    for (int j = 0; j < order / 2; ++j) {
        const int k = order - 1 - j;
        const double x = 0.5 * (rule.nodes[k] - rule.nodes[j]);
        const double w = 0.5 * (rule.weights[k] + rule.weights[j]);
        rule.nodes[j] = -x;
        rule.nodes[k] = x;
        rule.weights[j] = rule.weights[k] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

HermiteBasis1D::HermiteBasis1D(int n_modes, int quad_order) : n_modes_(n_modes) {
    if (n_modes < 1) throw std::invalid_argument("build_basis: n_modes must be >= 1");
    if (quad_order < n_modes)
        throw std::invalid_argument("build_basis: quad_order (" + std::to_string(quad_order) +
                                    ") must be >= n_modes (" + std::to_string(n_modes) + ")");

    auto rule = gauss_hermite_rule(quad_order);
    nodes_ = std::move(rule.nodes);
    weights_ = std::move(rule.weights);

    const auto q = static_cast<std::size_t>(quad_order);
    eval_table_.assign(static_cast<std::size_t>(n_modes) * q, 0.0);
    analysis_.assign(eval_table_.size(), 0.0);
    std::vector<double> chis(n_modes);
    for (std::size_t j = 0; j < q; ++j) {
        hermite_functions(nodes_[j], chis);
        for (int n = 0; n < n_modes; ++n) {
            eval_table_[n * q + j] = chis[n];
            analysis_[n * q + j] = weights_[j] * chis[n];
        }
    }
    eigenvalues_.resize(n_modes);
    for (int n = 0; n < n_modes; ++n) eigenvalues_[n] = n + 0.5;
}

HermiteBasis1D build_basis(int n_modes, int quad_order) {
    HermiteBasis1D basis(n_modes, quad_order);
    // Guard against an under-resolved coupling quadrature.
    const double k0 = kappa_n(0, 1.0, 1.0);
    const double k1 = kappa_n(1, 1.0, 1.0);
    const double ref0 = 1.0 / std::sqrt(kTwoPi);
    const double ref1 = 0.75 / std::sqrt(kTwoPi);
    if (std::abs(k0 - ref0) > 1e-12 || std::abs(k1 - ref1) > 1e-12)
        throw std::logic_error("build_basis: coupling quadrature failed its closed-form check");
    return basis;
}

std::vector<cplx> hermite_forward(const HermiteBasis1D& basis, std::span<const cplx> values) {
    const int q = basis.quad_order();
    if (static_cast<int>(values.size()) != q)
        throw std::invalid_argument("hermite_forward: expected " + std::to_string(q) + " nodal values, got " +
                                    std::to_string(values.size()));
    std::vector<cplx> out(basis.n_modes());
    const auto& a = basis.analysis_table();
    for (int n = 0; n < basis.n_modes(); ++n) {
        cplx acc{};
        const double* row = a.data() + static_cast<std::size_t>(n) * q;
        for (int j = 0; j < q; ++j) acc += row[j] * values[j];
        out[n] = acc;
    }
    return out;
}

std::vector<cplx> hermite_backward(const HermiteBasis1D& basis, std::span<const cplx> coeffs) {
    const int q = basis.quad_order();
    if (static_cast<int>(coeffs.size()) != basis.n_modes())
        throw std::invalid_argument("hermite_backward: expected " + std::to_string(basis.n_modes()) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
    std::vector<cplx> out(q);
    for (int n = 0; n < basis.n_modes(); ++n) {
        const cplx c = coeffs[n];
        for (int j = 0; j < q; ++j) out[j] += basis.chi(n, j) * c;
    }
    return out;
}

cplx oscillator_phase(double theta, double level) {
    const double angle = std::fmod(theta * level, kTwoPi);
    return {std::cos(angle), -std::sin(angle)};
}

void apply_exp_Hz(double theta, std::span<cplx> coeffs) {
    for (std::size_t n = 0; n < coeffs.size(); ++n) coeffs[n] *= oscillator_phase(theta, n + 0.5);
}

namespace {

// Gauss-Legendre nodes and weights on [-1, 1] by Golub-Welsch.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int order) {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
    Eigen::VectorXd sub(order - 1);
    for (int k = 1; k < order; ++k) sub(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    std::vector<double> x(order), w(order);
    for (int j = 0; j < order; ++j) {
        x[j] = solver.eigenvalues()(j);
        const double v = solver.eigenvectors()(0, j);
        w[j] = 2.0 * v * v;
    }
    return {x, w};
}

}  // namespace

double kappa_n(int n, double sigma, double lambda, int quad_order) {
    if (n < 0) throw std::invalid_argument("kappa_n: negative mode index");
    if (lambda == 0.0) return 0.0;
    const double power = 2.0 * sigma + 2.0;
    std::vector<double> chis(n + 1);

    if (sigma == std::floor(sigma)) {
        // |chi_n|^(2 sigma + 2) is exp(-(sigma + 1) z^2) times a polynomial
        if (quad_order <= 0) quad_order = std::max(4 * (n + 1), 96);
        const auto rule = gauss_hermite_rule(quad_order);
        const double scale = 1.0 / std::sqrt(sigma + 1.0);
        double sum = 0.0;
        for (int j = 0; j < quad_order; ++j) {
            hermite_functions(rule.nodes[j] * scale, chis);
            sum += rule.weights[j] * std::pow(std::abs(chis[n]), power);
        }
        return lambda * scale * sum;
    }

    // Otherwise the integrand has kinks at the zeros of chi_n (the nodes of the
    // n-point rule); integrate piecewise between them.
    if (quad_order <= 0) quad_order = 48;
    std::vector<double> cuts;
    if (n > 0) cuts = gauss_hermite_rule(n).nodes;
    const double reach = (n > 0 ? cuts.back() : 0.0) + 9.0;
    cuts.insert(cuts.begin(), -reach);
    cuts.push_back(reach);
    if (n == 0) cuts.insert(cuts.begin() + 1, 0.0);
    const auto [gx, gw] = gauss_legendre(quad_order);
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double mid = 0.5 * (cuts[k] + cuts[k + 1]), half = 0.5 * (cuts[k + 1] - cuts[k]);
        double part = 0.0;
        for (int j = 0; j < quad_order; ++j) {
            hermite_functions(mid + half * gx[j], chis);
            part += gw[j] * std::pow(std::abs(chis[n]), power);
        }
        sum += half * part;
    }
    return lambda * sum;
}

}  // namespace anisogpe
