#ifndef DIRIMG_HOMOLOGY_HPP
#define DIRIMG_HOMOLOGY_HPP

// Chain homology basis for hyperelliptic curves: loops around consecutive
// pairs of canonically ordered branch points. Adjacent loops meet once, so
// the raw intersection matrix is the antisymmetric tridiagonal chain form;
// an integer symplectic Gram-Schmidt turns it into the standard J.

#include <cstdint>
#include <utility>
#include <vector>

#include "dirimg/poly.hpp"

namespace dirimg {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct HomologyBasis {
    int genus = 0;
    std::vector<std::pair<int, int>> chain_loops; // loop j encircles roots (j, j+1)
    IntMatrix raw_intersections;                  // chain form, +1 above diagonal
    IntMatrix symplectic_transform;               // S with S * raw * S^T = J
};

inline IntMatrix standard_symplectic_form(int g) {
    IntMatrix j(2 * g, std::vector<std::int64_t>(2 * g, 0));
    for (int i = 0; i < g; ++i) {
        j[i][g + i] = 1;
        j[g + i][i] = -1;
    }
    return j;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    std::size_t n = a.size(), m = b[0].size(), k = b.size();
    IntMatrix r(n, std::vector<std::int64_t>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l])
                for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    return r;
}

inline IntMatrix mat_transpose(const IntMatrix& a) {
    IntMatrix r(a[0].size(), std::vector<std::int64_t>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

namespace detail {

inline bool segments_properly_cross(cplx a, cplx b, cplx c, cplx d) {
    auto ccw = [](cplx p, cplx q, cplx r) {
        return (q.real() - p.real()) * (r.imag() - p.imag()) -
               (q.imag() - p.imag()) * (r.real() - p.real());
    };
    double d1 = ccw(a, b, c), d2 = ccw(a, b, d), d3 = ccw(c, d, a), d4 = ccw(c, d, b);
    return (d1 * d2 < 0) && (d3 * d4 < 0);
}

} // namespace detail

/// Admissibility: consecutive-pair segments of the canonical ordering are
/// pairwise non-crossing (shared endpoints between neighbours are fine).
inline void check_orderable(const std::vector<cplx>& sorted_roots) {
    std::size_t n = sorted_roots.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (sorted_roots[i] == sorted_roots[i + 1])
            throw Error(ErrorKind::unsupported_configuration,
                        "ordering ambiguity: two branch points share both order keys");
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 2; j + 1 < n; ++j)
            if (detail::segments_properly_cross(sorted_roots[i], sorted_roots[i + 1],
                                                sorted_roots[j], sorted_roots[j + 1]))
                throw Error(ErrorKind::unsupported_configuration,
                            "branch cut chain self-crosses; configuration unsupported");
}

/// Integer symplectic reduction S of an antisymmetric unimodular matrix with
/// a +-1 pivot available at every stage (true for chain matrices).
inline IntMatrix symplectic_gram_schmidt(const IntMatrix& m_in) {
    std::size_t n = m_in.size();
    IntMatrix m = m_in;
    IntMatrix basis(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    while (!idx.empty()) {
        std::size_t pi = n, pj = n;
        for (auto i : idx) {
            for (auto j : idx)
                if (m[i][j] == 1 || m[i][j] == -1) {
                    pi = i;
                    pj = j;
                    break;
                }
            if (pi != n) break;
        }
        if (pi == n)
            throw Error(ErrorKind::internal,
                        "symplectic reduction: no unimodular pivot (unexpected lattice)");
        if (m[pi][pj] == -1) std::swap(pi, pj);
        for (auto k : idx) {
            if (k == pi || k == pj) continue;
            std::int64_t a = m[k][pj], b = m[k][pi];
            if (a == 0 && b == 0) continue;
            // gamma_k <- gamma_k - a gamma_pi + b gamma_pj
            for (std::size_t c = 0; c < n; ++c)
                basis[k][c] += -a * basis[pi][c] + b * basis[pj][c];
            for (std::size_t c = 0; c < n; ++c) m[k][c] += -a * m[pi][c] + b * m[pj][c];
            for (std::size_t r = 0; r < n; ++r) m[r][k] += -a * m[r][pi] + b * m[r][pj];
        }
        pairs.emplace_back(pi, pj);
        std::vector<std::size_t> rest;
        for (auto k : idx)
            if (k != pi && k != pj) rest.push_back(k);
        idx = std::move(rest);
    }
    IntMatrix s(n, std::vector<std::int64_t>(n, 0));
    std::size_t g = pairs.size();
    for (std::size_t q = 0; q < g; ++q) {
        s[q] = basis[pairs[q].first];
        s[q + g] = basis[pairs[q].second];
    }
    return s;
}

/// Homology chain for canonically ordered, admissible branch points.
inline HomologyBasis homology_basis(const std::vector<cplx>& sorted_roots) {
    long d = long(sorted_roots.size());
    if (d < 3) throw Error(ErrorKind::input, "need at least 3 branch points");
    check_orderable(sorted_roots);
    int g = int((d - 1) / 2);
    HomologyBasis h;
    h.genus = g;
    for (int j = 0; j < 2 * g; ++j) h.chain_loops.emplace_back(j, j + 1);
    h.raw_intersections.assign(2 * g, std::vector<std::int64_t>(2 * g, 0));
    for (int j = 0; j + 1 < 2 * g; ++j) {
        h.raw_intersections[j][j + 1] = 1;
        h.raw_intersections[j + 1][j] = -1;
    }
    h.symplectic_transform = symplectic_gram_schmidt(h.raw_intersections);
    return h;
}

/// Exact integer determinant (Bareiss); used to confirm det S = +-1.
inline std::int64_t int_determinant(IntMatrix a) {
    std::size_t n = a.size();
    std::int64_t prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace dirimg

#endif
