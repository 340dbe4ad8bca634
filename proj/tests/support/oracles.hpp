#ifndef DIRIMG_TEST_ORACLES_HPP
#define DIRIMG_TEST_ORACLES_HPP

// Independent oracles used only by tests. Nothing here may call into the
// period pipeline it is checking.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "dirimg/homology.hpp"
#include "dirimg/poly.hpp"

namespace dirimg::oracles {

// ---------------------------------------------------------------------------
// Arithmetic-geometric mean and complete elliptic integrals.

inline double agm(double x, double y) {
    for (int i = 0; i < 80 && std::abs(x - y) > 1e-17 * (std::abs(x) + std::abs(y)); ++i) {
        double a = 0.5 * (x + y), g = std::sqrt(x * y);
        x = a;
        y = g;
    }
    return 0.5 * (x + y);
}

/// K(m) with parameter m = k^2.
inline double ellip_k(double m) { return M_PI / (2.0 * agm(1.0, std::sqrt(1.0 - m))); }

/// For real branch points a < b < c of y^2 = (z-a)(z-b)(z-c):
/// |int_a^b dz/|y|| and |int_b^c dz/|y||.
struct CubicPeriodsOracle {
    double seg_ab;
    double seg_bc;
};

inline CubicPeriodsOracle real_cubic_segment_integrals(double a, double b, double c) {
    double pref = 2.0 / std::sqrt(c - a);
    return {pref * ellip_k((b - a) / (c - a)), pref * ellip_k((c - b) / (c - a))};
}

// ---------------------------------------------------------------------------
// Brute-force two-sheet 2-D quadrature of G_ij = i int omega_i ^ conj(omega_j)
// for omega_i = z^i dz/y on y^2 = f(z):
//   G_ij = 4 * int_C z^i conj(z)^j / |f(z)| dA(z).
// Smooth partition of unity: exponential-bump disks around each branch point
// (polar grids), inversion for the far field, tensor Gauss-Legendre for the
// smooth middle part.

namespace detail {

inline double bump_sigma(double t) { return t <= 0.0 ? 0.0 : std::exp(-1.0 / t); }

/// Smooth 0 -> 1 transition on [0, 1].
inline double smooth_step(double s) {
    double a = bump_sigma(s), b = bump_sigma(1.0 - s);
    return a / (a + b);
}

inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            double dp = n * (z * p0 - p1) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p0 / dp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        x[i] = z;
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
            double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
        }
        double dp = n * (z * p0 - p1) / (z * z - 1.0);
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
}

} // namespace detail

inline std::complex<double> gram_2d_two_sheet(const Poly& f, const std::vector<cplx>& roots,
                                              int i, int j) {
    using std::abs;
    const std::size_t nr = roots.size();
    std::vector<double> rho(nr);
    for (std::size_t k = 0; k < nr; ++k) {
        double dmin = 1e300;
        for (std::size_t l = 0; l < nr; ++l)
            if (l != k) dmin = std::min(dmin, abs(roots[k] - roots[l]));
        rho[k] = 0.5 * dmin;
    }
    double rmax = 0.0;
    for (auto& r : roots) rmax = std::max(rmax, abs(r));
    const double R1 = 2.0 * rmax + 2.0, R2 = 1.6 * R1;

    auto chi_disk = [&](std::size_t k, cplx z) {
        double s = (abs(z - roots[k]) - 0.35 * rho[k]) / (0.40 * rho[k]);
        return 1.0 - detail::smooth_step(s);
    };
    auto chi_far = [&](cplx z) {
        return detail::smooth_step((abs(z) - R1) / (R2 - R1));
    };
    auto integrand = [&](cplx z) {
        cplx v = std::pow(z, i) * std::pow(std::conj(z), j);
        return 4.0 * v / abs(poly_eval(f, z));
    };

    std::vector<double> gx, gw;
    detail::gauss_legendre(48, gx, gw);
    cplx total = 0.0;

    // disks around branch points, polar
    const int ntheta = 160;
    for (std::size_t k = 0; k < nr; ++k) {
        double rout = 0.78 * rho[k];
        cplx acc = 0.0;
        for (int a = 0; a < 48; ++a) {
            double r = 0.5 * rout * (gx[std::size_t(a)] + 1.0);
            double wr = 0.5 * rout * gw[std::size_t(a)];
            for (int t = 0; t < ntheta; ++t) {
                double th = 2.0 * M_PI * t / ntheta;
                cplx z = roots[k] + r * cplx(std::cos(th), std::sin(th));
                acc += integrand(z) * chi_disk(k, z) * r * wr * (2.0 * M_PI / ntheta);
            }
        }
        total += acc;
    }

    // far field by inversion z = 1/zeta, dA_z = dA_zeta / |zeta|^4
    {
        double rz = 1.0 / R1;
        cplx acc = 0.0;
        for (int a = 0; a < 48; ++a) {
            double r = 0.5 * rz * (gx[std::size_t(a)] + 1.0);
            double wr = 0.5 * rz * gw[std::size_t(a)];
            for (int t = 0; t < ntheta; ++t) {
                double th = 2.0 * M_PI * t / ntheta;
                cplx zeta = r * cplx(std::cos(th), std::sin(th));
                if (abs(zeta) < 1e-300) continue;
                cplx z = 1.0 / zeta;
                double jac = 1.0 / std::pow(abs(zeta), 4);
                acc += integrand(z) * chi_far(z) * jac * r * wr * (2.0 * M_PI / ntheta);
            }
        }
        total += acc;
    }

    // middle region on the bounding box, tensor Gauss-Legendre
    {
        std::vector<double> bx, bw;
        detail::gauss_legendre(260, bx, bw);
        cplx acc = 0.0;
        for (int a = 0; a < 260; ++a) {
            double x = R2 * bx[std::size_t(a)];
            for (int b = 0; b < 260; ++b) {
                double y = R2 * bx[std::size_t(b)];
                cplx z(x, y);
                double chi = 1.0 - chi_far(z);
                for (std::size_t k = 0; k < nr; ++k) chi -= chi_disk(k, z);
                if (chi <= 0.0) continue;
                acc += integrand(z) * chi * bw[std::size_t(a)] * bw[std::size_t(b)] * R2 * R2;
            }
        }
        total += acc;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Random integer symplectic matrices (products of elementary generators).

inline IntMatrix identity_int(int n) {
    IntMatrix m(std::size_t(n), std::vector<std::int64_t>(std::size_t(n), 0));
    for (int i = 0; i < n; ++i) m[std::size_t(i)][std::size_t(i)] = 1;
    return m;
}

inline IntMatrix random_symplectic(int g, std::mt19937_64& rng, int factors = 6) {
    int n = 2 * g;
    IntMatrix s = identity_int(n);
    for (int f = 0; f < factors; ++f) {
        IntMatrix gmat = identity_int(n);
        int kind = int(rng() % 3);
        if (kind == 0) { // [[I, B],[0, I]], B symmetric
            int i = int(rng() % std::size_t(g)), j = int(rng() % std::size_t(g));
            std::int64_t v = std::int64_t(rng() % 3) - 1;
            gmat[std::size_t(i)][std::size_t(g + j)] += v;
            gmat[std::size_t(j)][std::size_t(g + i)] += (i == j) ? 0 : v;
        } else if (kind == 1) { // [[A, 0],[0, A^{-T}]], A elementary
            if (g > 1) {
                int i = int(rng() % std::size_t(g)), j = int(rng() % std::size_t(g));
                if (i != j) {
                    std::int64_t v = std::int64_t(rng() % 3) - 1;
                    gmat[std::size_t(i)][std::size_t(j)] += v;
                    gmat[std::size_t(g + j)][std::size_t(g + i)] -= v;
                }
            }
        } else { // block swap J
            gmat = IntMatrix(std::size_t(n), std::vector<std::int64_t>(std::size_t(n), 0));
            for (int i = 0; i < g; ++i) {
                gmat[std::size_t(i)][std::size_t(g + i)] = 1;
                gmat[std::size_t(g + i)][std::size_t(i)] = -1;
            }
        }
        s = mat_mul(s, gmat);
    }
    return s;
}

inline bool is_symplectic(const IntMatrix& s, int g) {
    auto j = standard_symplectic_form(g);
    auto m = mat_mul(mat_mul(s, j), mat_transpose(s));
    return m == j;
}

} // namespace dirimg::oracles

#endif
