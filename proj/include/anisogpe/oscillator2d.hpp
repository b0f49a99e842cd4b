#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace anisogpe {

using cplx = std::complex<double>;

class Grid3D;

/// One joint eigenstate of H_x = -Delta_x/2 + |x|^2/2 and L_z = i x2 d/dx1 - i x1 d/dx2.
/// `coeffs[a1]` multiplies chi_{a1}(x1) chi_{n-a1}(x2).
struct JointState {
    int n = 0;
    int mu = 0;
    std::vector<cplx> coeffs;
};

/// Joint (H_x, L_z) eigenbasis for levels 0..n_levels, built from the circular
/// ladder operators A_pm = (a1 -+ i a2)/sqrt(2): |n+, n-> has energy n+ + n- + 1
/// and angular number mu = n+ - n-.
class Oscillator2DBasis {
public:
    explicit Oscillator2DBasis(int n_levels);

    int n_levels() const noexcept { return n_levels_; }
    const std::vector<JointState>& states() const noexcept { return states_; }
    /// States of level n, ordered by increasing mu.
    std::vector<const JointState*> level(int n) const;

    static double energy(int n) noexcept { return n + 1.0; }

private:
    int n_levels_;
    std::vector<JointState> states_;
};

/// Throws std::invalid_argument for n_levels < 0 and std::logic_error if the
/// constructed states fail the eigen-relation check.
Oscillator2DBasis build_joint_basis(int n_levels);

/// Exact matrix of L_z restricted to the Cartesian states of level n whose
/// indices both stay below `per_axis_limit` (the full level when the limit is
/// larger than n). Row/column k corresponds to a1 = first_a1 + k.
Eigen::MatrixXcd angular_momentum_block(int n, int per_axis_limit, int* first_a1 = nullptr);

/// H_x acting on level-n Cartesian coefficients (diagonal, n + 1).
std::vector<cplx> apply_Hx_level(int n, const std::vector<cplx>& coeffs);
/// L_z acting on level-n Cartesian coefficients via ladder matrix elements.
std::vector<cplx> apply_Lz_level(int n, const std::vector<cplx>& coeffs);

/// pi^{-1/2} exp(-(x1^2 + x2^2)/2) on the transverse plane of `grid` (n1 * n2
/// values, x1-major). Throws DomainTooSmall if the discrete L2 norm misses 1
/// by more than 1e-6.
std::vector<double> ground_state_profile(const Grid3D& grid);

}  // namespace anisogpe
