#ifndef DIRIMG_PERIODS_HPP
#define DIRIMG_PERIODS_HPP

// Numerical Hodge theory for a single hyperelliptic fiber y^2 = f(z):
// loop periods by Gauss-Chebyshev quadrature between branch points (the two
// inverse-square-root endpoint factors are absorbed into the weight, the
// remaining analytic factor's square root is tracked continuously), the
// Riemann bilinear relations as the pipeline self-check, and L^2 Gram data.
//
// Conventions, fixed once and validated against the torus oracle:
//   intersection form J = [[0, I],[-I, 0]], A-periods first;
//   int_X a ^ b = P(a) J P(b)^T for closed 1-forms with period rows P;
//   G_ij = <omega_j, omega_i> = i int omega_j ^ conj(omega_i), so that
//   ||sum c_i omega_i||^2 = c^H G c and G = -i conj(Pi) J Pi^T.

#include <Eigen/Dense>

#include <cmath>
#include <functional>

#include "dirimg/homology.hpp"
#include "dirimg/poly.hpp"
#include "dirimg/roots.hpp"

namespace dirimg {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

struct HyperellipticCurve {
    Poly f;                  // ascending coefficients
    std::vector<cplx> branch_points; // canonical order
    int genus = 0;
};

inline HyperellipticCurve make_curve(const Poly& f, const RootFinderParams& rp = {}) {
    long d = poly_degree(f);
    if (d < 3) throw Error(ErrorKind::input, "curve degree must be >= 3");
    HyperellipticCurve c;
    c.f.assign(f.begin(), f.begin() + d + 1);
    c.branch_points = find_roots(c.f, rp);
    sort_canonical(c.branch_points);
    c.genus = int((d - 1) / 2);
    return c;
}

namespace detail {

constexpr double kTrackTol = 1e-12;
constexpr int kTrackMaxDepth = 48;

/// Continue a square root of `eval` from (t0, w0) to t1 along the parameter
/// interval, bisecting until each step rotates the value by a safe angle.
inline cplx continue_sqrt(const std::function<cplx(double)>& eval, double t0, cplx w0,
                          double t1, int depth = 0) {
    cplx h1 = eval(t1);
    double scale = std::max(std::abs(w0) * std::abs(w0), std::abs(h1));
    if (std::abs(h1) < kTrackTol * scale)
        throw Error(ErrorKind::quadrature_path,
                    "branch tracking hit a near-zero of the analytic factor");
    cplx w1 = std::sqrt(h1);
    if (std::abs(w1 - w0) > std::abs(w1 + w0)) w1 = -w1;
    if (std::abs(w1 - w0) <= 0.5 * std::abs(w0)) return w1;
    if (depth >= kTrackMaxDepth)
        throw Error(ErrorKind::quadrature_path, "branch tracking lost continuity");
    double tm = 0.5 * (t0 + t1);
    cplx wm = continue_sqrt(eval, t0, w0, tm, depth + 1);
    return continue_sqrt(eval, tm, wm, t1, depth + 1);
}

/// Track sqrt(f) along the straight path z0 -> z1 starting from value y0.
inline cplx track_sqrt_f(const Poly& f, cplx z0, cplx y0, cplx z1) {
    auto eval = [&](double t) { return poly_eval(f, z0 + (z1 - z0) * t); };
    return continue_sqrt(eval, 0.0, y0, 1.0);
}

} // namespace detail

struct LoopPeriodData {
    MatrixXcd loop_periods; // g x 2g, column j = loop around roots (j, j+1)
    cplx anchor_w0 = 0.0;   // sheet anchor: analytic-factor sqrt at loop 0 midpoint
};

/// Loop periods of the canonical differentials z^i dz/y, i = 0..g-1, over
/// the 2g chain loops. `ordered_roots` fixes the chain (defaults to the
/// curve's canonical order); `anchor` pins the global sheet to a reference
/// fiber so that families stay in one flat frame.
inline LoopPeriodData loop_periods(const Poly& f, const std::vector<cplx>& ordered_roots,
                                   int genus, int quad_order,
                                   std::optional<cplx> anchor = std::nullopt) {
    if (quad_order < 16) throw Error(ErrorKind::input, "quad_order must be >= 16");
    long d = poly_degree(f);
    const cplx lead = f[std::size_t(d)];
    const auto& r = ordered_roots;
    const int n = quad_order;

    std::vector<double> nodes(n);
    for (int k = 0; k < n; ++k) nodes[k] = std::cos((2.0 * k + 1.0) * M_PI / (2.0 * n));

    LoopPeriodData out;
    out.loop_periods.resize(genus, 2 * genus);

    cplx prev_mid = 0.0, prev_y = 0.0;
    bool have_prev = false;
    for (int j = 0; j < 2 * genus; ++j) {
        cplx a = r[std::size_t(j)], b = r[std::size_t(j + 1)];
        cplx mid = 0.5 * (a + b), rad = 0.5 * (b - a);
        auto h_of = [&](double s) {
            cplx z = mid + rad * s, v = lead;
            for (std::size_t k = 0; k < r.size(); ++k)
                if (int(k) != j && int(k) != j + 1) v *= (z - r[k]);
            return v;
        };
        cplx w0 = std::sqrt(h_of(0.0));
        if (j == 0) {
            if (anchor && std::abs(w0 - *anchor) > std::abs(w0 + *anchor)) w0 = -w0;
            out.anchor_w0 = w0;
        }

        // track the analytic factor from the midpoint outward through nodes
        std::vector<cplx> w(n);
        auto sweep = [&](bool positive) {
            double s_prev = 0.0;
            cplx w_prev = w0;
            if (positive) {
                for (int k = n - 1; k >= 0; --k) { // nodes descend; reverse = ascending
                    double s = nodes[std::size_t(k)];
                    if (s < 0) continue;
                    w[std::size_t(k)] = detail::continue_sqrt(h_of, s_prev, w_prev, s);
                    s_prev = s;
                    w_prev = w[std::size_t(k)];
                }
            } else {
                for (int k = 0; k < n; ++k) {
                    double s = nodes[std::size_t(k)];
                    if (s >= 0) continue;
                    w[std::size_t(k)] = detail::continue_sqrt(h_of, s_prev, w_prev, s);
                    s_prev = s;
                    w_prev = w[std::size_t(k)];
                }
            }
        };
        sweep(true);
        sweep(false);

        // chain the sheet through a corner detour on the left of the travel
        // directions at the shared branch point
        double sheet = 1.0;
        cplx y_mid = cplx(0, 1) * rad * w0;
        if (have_prev) {
            cplx share = r[std::size_t(j)];
            cplx u = r[std::size_t(j)] - r[std::size_t(j - 1)];
            u /= std::abs(u);
            cplx v = r[std::size_t(j + 1)] - r[std::size_t(j)];
            v /= std::abs(v);
            cplx wd = cplx(0, 1) * (u + v);
            if (std::abs(wd) < 1e-9) wd = cplx(0, 1) * u;
            wd /= std::abs(wd);
            double dmin = 1e300;
            for (auto& e : r)
                if (std::abs(share - e) > 1e-14) dmin = std::min(dmin, std::abs(share - e));
            cplx corner = share + 0.4 * dmin * wd;
            cplx yt = detail::track_sqrt_f(f, prev_mid, prev_y, corner);
            yt = detail::track_sqrt_f(f, corner, yt, mid);
            sheet = (std::abs(yt - y_mid) <= std::abs(yt + y_mid)) ? 1.0 : -1.0;
        }
        prev_mid = mid;
        prev_y = sheet * y_mid;
        have_prev = true;

        // P_j(omega_i) = 2 sheet / i * (pi/n) sum_k z(s_k)^i / w(s_k)
        const cplx pref = 2.0 * sheet * (M_PI / n) * cplx(0, -1);
        for (int i = 0; i < genus; ++i) {
            cplx acc = 0.0;
            for (int k = 0; k < n; ++k) {
                cplx z = mid + rad * nodes[std::size_t(k)];
                acc += std::pow(z, i) / w[std::size_t(k)];
            }
            out.loop_periods(i, j) = pref * acc;
        }
    }
    return out;
}

struct PeriodResiduals {
    double riemann_sym = 0.0;      // ||Pi J Pi^T||_F
    double riemann_sym_rel = 0.0;  // relative to ||Pi||_F^2
    double positivity_min_eig = 0.0;
};

struct PeriodData {
    MatrixXcd Pi; // g x 2g in the symplectic frame, A block first
    MatrixXcd G;  // Hermitian positive definite Gram matrix
    PeriodResiduals residuals;
    int quad_order = 0;
};

inline MatrixXcd symplectic_j_complex(int g) {
    MatrixXcd j = MatrixXcd::Zero(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        j(i, g + i) = 1;
        j(g + i, i) = -1;
    }
    return j;
}

/// Riemann relations: Pi J Pi^T = 0 and -i conj(Pi) J Pi^T positive definite.
inline PeriodResiduals validate_riemann_relations(const MatrixXcd& Pi, double rel_tol = 1e-8,
                                                  bool throw_on_fail = true) {
    int g = int(Pi.rows());
    MatrixXcd J = symplectic_j_complex(g);
    PeriodResiduals res;
    res.riemann_sym = (Pi * J * Pi.transpose()).norm();
    double scale = Pi.norm() * Pi.norm();
    res.riemann_sym_rel = res.riemann_sym / scale;
    MatrixXcd H = cplx(0, -1) * Pi.conjugate() * J * Pi.transpose();
    H = 0.5 * (H + H.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H);
    res.positivity_min_eig = es.eigenvalues().minCoeff();
    if (throw_on_fail && (res.riemann_sym_rel > rel_tol || res.positivity_min_eig <= 0))
        throw Error(ErrorKind::orientation,
                    "invalid period data: Riemann relation residual " +
                        std::to_string(res.riemann_sym_rel) + ", min positivity eigenvalue " +
                        std::to_string(res.positivity_min_eig));
    return res;
}

/// Gram matrix of the holomorphic frame via the bilinear identity,
/// G = -i conj(Pi) J Pi^T  (so that ||sum c_i omega_i||^2 = c^H G c).
inline MatrixXcd gram_from_periods(const MatrixXcd& Pi) {
    int g = int(Pi.rows());
    MatrixXcd J = symplectic_j_complex(g);
    MatrixXcd G = cplx(0, -1) * Pi.conjugate() * J * Pi.transpose();
    G = 0.5 * (G + G.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(G);
    if (es.eigenvalues().minCoeff() <= 0)
        throw Error(ErrorKind::orientation,
                    "Gram matrix not positive definite: homology orientation flipped");
    return G;
}

/// Full pipeline for one fiber.
inline PeriodData compute_periods(const HyperellipticCurve& curve, int quad_order,
                                  std::optional<cplx> anchor = std::nullopt,
                                  const std::vector<cplx>* ordered_roots = nullptr,
                                  cplx* anchor_out = nullptr) {
    const std::vector<cplx>& roots = ordered_roots ? *ordered_roots : curve.branch_points;
    if (!ordered_roots) check_orderable(roots);
    HomologyBasis hom = homology_basis(roots);
    auto lp = loop_periods(curve.f, roots, curve.genus, quad_order, anchor);
    if (anchor_out) *anchor_out = lp.anchor_w0;
    int g = curve.genus;
    MatrixXcd S(2 * g, 2 * g);
    for (int i = 0; i < 2 * g; ++i)
        for (int j = 0; j < 2 * g; ++j)
            S(i, j) = double(hom.symplectic_transform[std::size_t(i)][std::size_t(j)]);
    PeriodData pd;
    pd.Pi = lp.loop_periods * S.transpose();
    pd.residuals = validate_riemann_relations(pd.Pi);
    pd.G = gram_from_periods(pd.Pi);
    pd.quad_order = quad_order;
    return pd;
}

/// Squared L^2 norm of the harmonic representative of a dbar-closed (0,1)
/// class given its pairings p_j = int alpha ^ omega_j. Expands in the
/// antiholomorphic frame; metric independent by the conjugation isometry
/// <conj omega_i, conj omega_j> = <omega_j, omega_i>.
inline double harmonic_01_norm(const VectorXcd& p, const MatrixXcd& G) {
    int g = int(G.rows());
    if (p.size() != g) throw Error(ErrorKind::input, "pairing vector has wrong length");
    // p_j = i (G^T c)_j
    VectorXcd c = (cplx(0, 1) * G.transpose()).partialPivLu().solve(p);
    cplx n2 = 0.0;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) n2 += c(i) * std::conj(c(j)) * G(i, j);
    return n2.real();
}

/// Pairings p_j = int alpha ^ omega_j of a class given by its period row
/// vector q over the symplectic cycles (bilinear identity).
inline VectorXcd pairings_from_period_row(const VectorXcd& q, const MatrixXcd& Pi) {
    int g = int(Pi.rows());
    MatrixXcd J = symplectic_j_complex(g);
    VectorXcd p(g);
    for (int i = 0; i < g; ++i) p(i) = q.transpose() * J * Pi.row(i).transpose();
    return p;
}

} // namespace dirimg

#endif
