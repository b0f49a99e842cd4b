#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "anisogpe/field.hpp"

namespace support {

using anisogpe::cplx;
using anisogpe::GridPtr;
using anisogpe::Representation;
using anisogpe::WaveField;

inline const double kPi = std::acos(-1.0);

/// Smooth random field: a Gaussian envelope on Fourier axes times random
/// complex weights, nonzero only in the first `modes` spectral modes of each
/// Hermite axis (all modes when modes < 0). Returned in the physical representation.
inline WaveField random_field(const GridPtr& g, std::uint64_t seed, int modes = -1) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n01;
    bool herm[3];
    for (int a = 0; a < 3; ++a) herm[a] = g->axis(a).kind() == anisogpe::AxisKind::hermite;
    const auto d = g->dims();
    WaveField f(g, anisogpe::make_representation(herm[0], herm[2]));
    for (int i = 0; i < d[0]; ++i)
        for (int j = 0; j < d[1]; ++j)
            for (int l = 0; l < d[2]; ++l) {
                const int idx[3] = {i, j, l};
                double env = 1.0;
                bool keep = true;
                for (int a = 0; a < 3; ++a) {
                    const auto& ax = g->axis(a);
                    if (herm[a]) {
                        if (modes >= 0 && idx[a] >= modes) keep = false;
                    } else if (ax.kind() == anisogpe::AxisKind::fourier) {
                        const double x = ax.coordinates()[idx[a]];
                        env *= std::exp(-0.5 * x * x);
                    }
                }
                const double a = n01(rng), b = n01(rng);
                f.at(i, j, l) = keep ? env * cplx(a, b) : cplx{};
            }
    f.to(Representation::physical);
    const double n = anisogpe::norm_L2(f);
    for (auto& v : f.data()) v /= n;
    return f;
}

/// ||a - b||, b taken in the representation of a.
inline double distance(const WaveField& a, const WaveField& b) {
    WaveField d = a;
    const WaveField bb = b.converted(a.representation());
    for (std::size_t q = 0; q < d.size(); ++q) d.data()[q] -= bb.data()[q];
    return anisogpe::norm_L2(d);
}

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t q = 0; q < a.size(); ++q) m = std::max(m, std::abs(a[q] - b[q]));
    return m;
}

/// Plain chi_n by the textbook recurrence, for cross checks.
inline double chi_ref(int n, double z) {
    double h0 = std::pow(kPi, -0.25) * std::exp(-0.5 * z * z);
    if (n == 0) return h0;
    double h1 = std::sqrt(2.0) * z * h0;
    for (int k = 1; k < n; ++k) {
        const double h2 = std::sqrt(2.0 / (k + 1)) * z * h1 - std::sqrt(static_cast<double>(k) / (k + 1)) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

/// Composite Simpson rule on [-a, a].
template <class F>
double simpson(F&& f, double a = 14.0, int n = 28000) {
    const double h = 2.0 * a / n;
    double s = f(-a) + f(a);
    for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * f(-a + k * h);
    return s * h / 3.0;
}

}  // namespace support
