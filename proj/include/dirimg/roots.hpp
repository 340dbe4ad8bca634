#ifndef DIRIMG_ROOTS_HPP
#define DIRIMG_ROOTS_HPP

// Simultaneous-iteration (Durand-Kerner) root finder with Newton polishing.
// Deterministic: fixed initial configuration, fixed iteration order.

#include <algorithm>
#include <cmath>

#include "dirimg/poly.hpp"

namespace dirimg {

struct RootFinderParams {
    int max_iterations = 600;
    int newton_steps = 4;
    double tol = 1e-14;
    double sep_tol_rel = 1e-8; // relative separation threshold (times root scale)
};

/// All complex roots of p. Throws degenerate-curve when two roots come
/// closer than sep_tol_rel * scale (the pipelines assume simple roots).
inline std::vector<cplx> find_roots(const Poly& p_in, const RootFinderParams& params = {}) {
    long deg = poly_degree(p_in);
    if (deg < 1) throw Error(ErrorKind::input, "find_roots: degree must be >= 1");
    Poly p(p_in.begin(), p_in.begin() + deg + 1);
    cplx lead = p[deg];
    for (auto& c : p) c /= lead;

    // Fujiwara-style radius bound
    double radius = 0.0;
    for (long i = 0; i < deg; ++i) {
        double b = std::pow(std::abs(p[i]), 1.0 / double(deg - i));
        radius = std::max(radius, 2.0 * b);
    }
    radius = std::max(radius, 0.5);

    std::vector<cplx> z(deg);
    const double golden_offset = 0.7393; // break symmetry of root constellations
    for (long k = 0; k < deg; ++k) {
        double ang = 2.0 * M_PI * (double(k) / double(deg)) + golden_offset;
        z[k] = radius * cplx(std::cos(ang), std::sin(ang));
    }

    Poly dp = poly_derivative(p);
    for (int it = 0; it < params.max_iterations; ++it) {
        double max_step = 0.0;
        for (long k = 0; k < deg; ++k) {
            cplx denom = 1.0;
            for (long j = 0; j < deg; ++j)
                if (j != k) denom *= (z[k] - z[j]);
            if (denom == 0.0) {
                z[k] += 1e-8 * radius; // nudge coincident iterates apart
                continue;
            }
            cplx dz = poly_eval(p, z[k]) / denom;
            z[k] -= dz;
            max_step = std::max(max_step, std::abs(dz));
        }
        if (max_step < params.tol * radius) break;
    }
    for (long k = 0; k < deg; ++k) {
        for (int s = 0; s < params.newton_steps; ++s) {
            cplx d = poly_eval(dp, z[k]);
            if (std::abs(d) == 0.0) break;
            z[k] -= poly_eval(p, z[k]) / d;
        }
    }

    double scale = 0.0;
    for (auto& r : z) scale = std::max(scale, std::abs(r));
    scale = std::max(scale, 1.0);
    double sep_tol = params.sep_tol_rel * scale;
    for (long i = 0; i < deg; ++i)
        for (long j = i + 1; j < deg; ++j)
            if (std::abs(z[i] - z[j]) < sep_tol)
                throw Error(ErrorKind::degenerate_curve,
                            "branch points closer than separation tolerance (repeated root?)");
    return z;
}

/// Canonical ordering: by real part, ties by imaginary part.
inline void sort_canonical(std::vector<cplx>& roots) {
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

} // namespace dirimg

#endif
