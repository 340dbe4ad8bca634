#ifndef DIRIMG_NOETHER_HPP
#define DIRIMG_NOETHER_HPP

// Exact certificates for the multiplication maps of a hyperelliptic curve:
// Sym^2 H^0(K) -> H^0(2K) in the standard monomial bases, kernels of
// multiplication by a fixed holomorphic form, and the plane-quartic
// (non-hyperelliptic genus 3) surjectivity witness. All ranks are computed
// over Q or Q(i), no floating point anywhere.
//
// Bases: H^0(K) = { z^{i-1} dz/y : i = 1..g };
// H^0(2K) = even part { z^a dz^2/y^2 : a = 0..2g-2 }
//        (+) odd part { z^b dz^2/y  : b = 0..g-3 }.
// The identification H^{0,1}(-K) ~ H^0(2K)^* is the monomial-basis duality.

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dirimg/exact.hpp"
#include "json.hpp"

namespace dirimg {

struct CanonicalBases {
    int genus = 0;
    std::vector<int> holo_exponents;       // z^e dz/y, e = 0..g-1
    std::vector<int> quad_even_exponents;  // z^a dz^2/y^2
    std::vector<int> quad_odd_exponents;   // z^b dz^2/y
    int quad_dim() const {
        return int(quad_even_exponents.size() + quad_odd_exponents.size());
    }
};

struct GenusModel {
    enum class Kind { hyperelliptic, plane_quartic };
    Kind kind = Kind::hyperelliptic;
    int genus = 0;
    // plane_quartic payload lives in PlaneQuartic below
    static GenusModel hyperelliptic(int g) { return GenusModel{Kind::hyperelliptic, g}; }
    static GenusModel plane_quartic() { return GenusModel{Kind::plane_quartic, 3}; }
};

inline CanonicalBases canonical_bases(const GenusModel& model) {
    if (model.kind != GenusModel::Kind::hyperelliptic)
        throw Error(ErrorKind::unsupported_model,
                    "canonical_bases: only hyperelliptic models carry these bases");
    int g = model.genus;
    if (g < 2) throw Error(ErrorKind::input, "canonical_bases requires genus >= 2");
    CanonicalBases b;
    b.genus = g;
    for (int e = 0; e < g; ++e) b.holo_exponents.push_back(e);
    for (int a = 0; a <= 2 * g - 2; ++a) b.quad_even_exponents.push_back(a);
    for (int bdeg = 0; bdeg <= g - 3; ++bdeg) b.quad_odd_exponents.push_back(bdeg);
    return b;
}

/// Matrix of v -> u*v : H^0(K) -> H^0(2K), rows indexed by the even part
/// (products of monomial differentials never hit the odd part).
template <class K>
ExactMatrix<K> mult_by_u_matrix(int g, const std::vector<K>& u) {
    if (int(u.size()) != g)
        throw Error(ErrorKind::input, "section coefficient vector has wrong length");
    ExactMatrix<K> m(2 * g - 1, g);
    for (int j = 0; j < g; ++j)
        for (int i = 0; i < g; ++i)
            m.at(i + j, j) = m.at(i + j, j) + u[i];
    return m;
}

/// Rank and cokernel dimension of Sym^2 H^0(K) -> H^0(2K).
inline std::pair<int, int> sym2_multiplication_rank(int g) {
    if (g < 2) throw Error(ErrorKind::input, "sym2_multiplication_rank requires genus >= 2");
    int pairs = g * (g + 1) / 2;
    ExactMatrix<Rational> m(3 * g - 3, pairs);
    int col = 0;
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j, ++col)
            m.at(i + j, col) = m.at(i + j, col) + Rational(1);
    int rank = int(m.rank());
    return {rank, 3 * g - 3 - rank};
}

/// dim { mu in H^0(2K)^* : mu(u v) = 0 for all v } = 3g-3 - rank(v -> uv).
template <class K>
int mult_by_u_kernel(int g, const std::vector<K>& u) {
    if (g < 2) throw Error(ErrorKind::input, "mult_by_u_kernel requires genus >= 2");
    auto m = mult_by_u_matrix<K>(g, u);
    return 3 * g - 3 - int(m.rank());
}

/// Same kernel computed through the transposed (dual-side) map; used as the
/// duality consistency cross-check.
template <class K>
int mult_by_u_kernel_dual(int g, const std::vector<K>& u) {
    auto m = mult_by_u_matrix<K>(g, u);
    ExactMatrix<K> mt(m.cols(), m.rows() + std::size_t(std::max(0, g - 2)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            mt.at(j, i) = m.at(i, j);
    // odd-part columns of the dual map are identically zero
    return int(m.rows()) + std::max(0, g - 2) - int(mt.rank());
}

/// dim of the intersection over all u of ker(mu -> mu u); equals the
/// cokernel of the Sym^2 map, g-2 on the hyperelliptic model.
inline int common_kernel_dim(int g) {
    if (g < 2) throw Error(ErrorKind::input, "common_kernel_dim requires genus >= 2");
    // stack the dual maps for the basis sections e_1..e_g
    ExactMatrix<Rational> stacked(std::size_t(g) * g, 3 * g - 3);
    for (int s = 0; s < g; ++s) {
        std::vector<Rational> u(g, Rational(0));
        u[s] = 1;
        auto m = mult_by_u_matrix<Rational>(g, u);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                stacked.at(std::size_t(s) * g + j, i) = m.at(i, j);
    }
    return 3 * g - 3 - int(stacked.rank());
}

// ---------------------------------------------------------------------------
// Plane quartic: exact smoothness certificate and Noether surjectivity.

/// Homogeneous form in (x, y, w); keys are exponent triples summing to deg.
struct TernaryForm {
    int deg = 0;
    std::map<std::array<int, 3>, GaussianRational> coeff;

    bool is_zero() const {
        for (auto& [e, c] : coeff)
            if (!c.is_zero()) return false;
        return true;
    }
    GaussianRational get(std::array<int, 3> e) const {
        auto it = coeff.find(e);
        return it == coeff.end() ? GaussianRational() : it->second;
    }
    void add(std::array<int, 3> e, const GaussianRational& c) {
        auto it = coeff.find(e);
        if (it == coeff.end()) coeff[e] = c;
        else it->second += c;
    }
};

inline std::vector<std::array<int, 3>> monomials_of_degree(int n) {
    std::vector<std::array<int, 3>> out;
    for (int a = n; a >= 0; --a)
        for (int b = n - a; b >= 0; --b)
            out.push_back({a, b, n - a - b});
    return out;
}

inline TernaryForm partial(const TernaryForm& f, int var) {
    TernaryForm d;
    d.deg = f.deg - 1;
    for (auto& [e, c] : f.coeff) {
        if (e[var] == 0 || c.is_zero()) continue;
        auto e2 = e;
        e2[var] -= 1;
        d.add(e2, c * GaussianRational(e[var]));
    }
    return d;
}

inline TernaryForm multiply(const TernaryForm& f, const TernaryForm& g) {
    TernaryForm p;
    p.deg = f.deg + g.deg;
    for (auto& [e1, c1] : f.coeff)
        for (auto& [e2, c2] : g.coeff) {
            if (c1.is_zero() || c2.is_zero()) continue;
            p.add({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
        }
    return p;
}

/// True iff the three partials of q4 have no common projective zero,
/// decided by surjectivity of (A,B,C) -> A q_x + B q_y + C q_w onto forms of
/// degree 7 (the Koszul regularity bound for three cubics).
inline bool plane_quartic_is_smooth(const TernaryForm& q4) {
    if (q4.deg != 4) throw Error(ErrorKind::input, "expected a quartic form");
    TernaryForm fx = partial(q4, 0), fy = partial(q4, 1), fw = partial(q4, 2);
    auto rows = monomials_of_degree(7);
    auto mults = monomials_of_degree(4);
    std::map<std::array<int, 3>, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    ExactMatrix<GaussianRational> mac(rows.size(), 3 * mults.size());
    const TernaryForm* parts[3] = {&fx, &fy, &fw};
    for (int p = 0; p < 3; ++p)
        for (std::size_t mi = 0; mi < mults.size(); ++mi) {
            std::size_t col = std::size_t(p) * mults.size() + mi;
            for (auto& [e, c] : parts[p]->coeff) {
                if (c.is_zero()) continue;
                std::array<int, 3> e2 = {e[0] + mults[mi][0], e[1] + mults[mi][1],
                                         e[2] + mults[mi][2]};
                mac.at(row_index[e2], col) += c;
            }
        }
    return mac.rank() == rows.size();
}

/// If q4 = c * Q^2 for a conic Q, return Q (the non-reduced witness).
inline std::optional<TernaryForm> quartic_square_root(const TernaryForm& q4) {
    auto monos4 = monomials_of_degree(4);
    std::array<int, 3> lead{-1, -1, -1};
    GaussianRational lead_c;
    for (auto& e : monos4) {
        auto c = q4.get(e);
        if (!c.is_zero()) {
            lead = e;
            lead_c = c;
            break;
        }
    }
    if (lead[0] < 0) return std::nullopt; // zero form
    if (lead[0] % 2 || lead[1] % 2 || lead[2] % 2) return std::nullopt;
    std::array<int, 3> qlead = {lead[0] / 2, lead[1] / 2, lead[2] / 2};
    auto monos2 = monomials_of_degree(2);
    TernaryForm q;
    q.deg = 2;
    q.coeff[qlead] = GaussianRational(1);
    // peel remaining coefficients in monomial order below the leading one
    bool past_lead = false;
    for (auto& m : monos2) {
        if (m == qlead) {
            past_lead = true;
            continue;
        }
        if (!past_lead) continue;
        std::array<int, 3> target = {qlead[0] + m[0], qlead[1] + m[1], qlead[2] + m[2]};
        GaussianRational rhs = q4.get(target) / lead_c;
        GaussianRational cross;
        for (auto& [e1, c1] : q.coeff)
            for (auto& [e2, c2] : q.coeff) {
                if (e1 == qlead || e2 == qlead) continue;
                if (e1[0] + e2[0] == target[0] && e1[1] + e2[1] == target[1] &&
                    e1[2] + e2[2] == target[2])
                    cross += c1 * c2;
            }
        q.coeff[m] = (rhs - cross) / GaussianRational(2);
    }
    TernaryForm sq = multiply(q, q);
    for (auto& e : monos4)
        if (q4.get(e) != sq.get(e) * lead_c) return std::nullopt;
    return q;
}

/// Noether surjectivity for a smooth plane quartic: Sym^2 H^0(K) -> H^0(2K)
/// is onto (6 = 6) iff no nonzero conic vanishes on the curve, which for a
/// smooth quartic always holds. Singular input is a precondition error.
inline bool plane_quartic_noether(const TernaryForm& q4) {
    bool any = false;
    for (auto& [e, c] : q4.coeff) any = any || !c.is_zero();
    if (!any) throw Error(ErrorKind::input, "zero quartic form");
    if (auto sq = quartic_square_root(q4)) {
        std::ostringstream os;
        os << "quartic is a perfect square of a conic (non-reduced curve)";
        throw Error(ErrorKind::input, os.str());
    }
    if (!plane_quartic_is_smooth(q4))
        throw Error(ErrorKind::input,
                    "quartic is singular: partial derivatives share a projective zero");
    return true;
}

// ---------------------------------------------------------------------------
// Certificate bundle.

struct NoetherCertificate {
    int genus = 0;
    int sym2_rank = 0;
    int coker_dim = 0;
    std::vector<std::vector<Rational>> tested_u;
    std::vector<int> kernel_dims;
    int common_kernel_dim = 0;
};

inline NoetherCertificate build_noether_certificate(
    int g, const std::vector<std::vector<Rational>>& extra_u = {}) {
    NoetherCertificate cert;
    cert.genus = g;
    auto [rank, coker] = sym2_multiplication_rank(g);
    cert.sym2_rank = rank;
    cert.coker_dim = coker;
    for (int s = 0; s < g; ++s) {
        std::vector<Rational> u(g, Rational(0));
        u[s] = 1;
        cert.tested_u.push_back(u);
    }
    for (auto& u : extra_u) cert.tested_u.push_back(u);
    for (auto& u : cert.tested_u)
        cert.kernel_dims.push_back(mult_by_u_kernel<Rational>(g, u));
    cert.common_kernel_dim = dirimg::common_kernel_dim(g);
    return cert;
}

inline nlohmann::json to_json(const NoetherCertificate& c) {
    nlohmann::json j;
    j["genus"] = c.genus;
    j["sym2_rank"] = c.sym2_rank;
    j["coker_dim"] = c.coker_dim;
    j["common_kernel_dim"] = c.common_kernel_dim;
    nlohmann::json us = nlohmann::json::array();
    for (auto& u : c.tested_u) {
        nlohmann::json one = nlohmann::json::array();
        for (auto& v : u) one.push_back(v.str());
        us.push_back(one);
    }
    j["tested_u"] = us;
    j["kernel_dims"] = c.kernel_dims;
    return j;
}

inline std::string to_text(const NoetherCertificate& c) {
    std::ostringstream os;
    os << "Hyperelliptic multiplication certificates, genus " << c.genus << "\n";
    os << "  dim Sym^2 H^0(K) -> H^0(2K): rank " << c.sym2_rank << " of " << 3 * c.genus - 3
       << " (cokernel " << c.coker_dim << ")\n";
    os << "  common kernel over all sections: " << c.common_kernel_dim
       << (c.common_kernel_dim > 0 ? "  [degenerate: curvature vanishes at the center in these directions]"
                                   : "  [no common degeneracy]")
       << "\n";
    for (std::size_t i = 0; i < c.tested_u.size(); ++i) {
        os << "  u = (";
        for (std::size_t k = 0; k < c.tested_u[i].size(); ++k)
            os << (k ? ", " : "") << c.tested_u[i][k].str();
        os << ") : ker(mu -> mu u) has dim " << c.kernel_dims[i] << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Exact Kodaira-Spencer pairing certificate for polynomial families
// y^2 = f(z) + t g(z). The first-order derivative of the flat periods of
// u = p_u dz/y is a multiple of the class [p_u g dz/y^3]; that class is
// purely holomorphic (the KS action on u vanishes) iff
//   p_u g = R f + sum_k c_k (k z^{k-1} f - z^k f'/2),  deg R <= genus-1,
// i.e. iff the reduction by exact differentials d(z^k/y) lands in H^{1,0}.

template <class K>
struct KsActionCertificate {
    bool vanishes = false;             // [K_0 . u] = 0 exactly
    std::vector<K> holomorphic_part;   // R coefficients when it vanishes
};

template <class K>
KsActionCertificate<K> ks_action_certificate(const ExactPoly<K>& f, const ExactPoly<K>& g_pert,
                                             const std::vector<K>& u) {
    long d = f.degree();
    if (d < 3) throw Error(ErrorKind::input, "ks_action_certificate: deg f must be >= 3");
    int genus = int((d - 1) / 2);
    if (int(u.size()) != genus)
        throw Error(ErrorKind::input, "ks_action_certificate: u has wrong length");
    ExactPoly<K> pu{std::vector<K>(u)};
    ExactPoly<K> P = pu * g_pert;
    KsActionCertificate<K> cert;
    if (P.is_zero()) {
        cert.vanishes = true;
        return cert;
    }
    ExactPoly<K> fp = f.derivative();
    long kmax = std::max<long>(P.degree() - d + 1, d) + 2;
    std::vector<ExactPoly<K>> gens;
    for (int b = 0; b < genus; ++b) gens.push_back(f.shifted(b));
    for (long k = 0; k <= kmax; ++k) {
        // d(z^k / y) ~ (k z^{k-1} f - z^k f'/2) dz / y^3
        ExactPoly<K> e = f.shifted(k ? k - 1 : 0);
        if (k == 0) e = ExactPoly<K>();
        else {
            ExactPoly<K> t1 = f.shifted(k - 1);
            std::vector<K> scaled(t1.c);
            for (auto& v : scaled) v = v * K(k);
            e = ExactPoly<K>(std::move(scaled));
        }
        ExactPoly<K> t2 = fp.shifted(k);
        std::vector<K> half(t2.c);
        for (auto& v : half) v = v / K(2);
        e = e - ExactPoly<K>(std::move(half));
        gens.push_back(e);
    }
    long dmax = P.degree();
    for (auto& gpoly : gens) dmax = std::max(dmax, gpoly.degree());
    ExactMatrix<K> m(std::size_t(dmax + 1), gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c)
        for (long r = 0; r <= gens[c].degree(); ++r)
            m.at(std::size_t(r), c) = gens[c].coeff(std::size_t(r));
    std::vector<K> rhs(std::size_t(dmax + 1), K(0));
    for (long r = 0; r <= P.degree(); ++r) rhs[std::size_t(r)] = P.coeff(std::size_t(r));
    auto sol = m.solve(rhs);
    if (!sol) return cert;
    cert.vanishes = true;
    cert.holomorphic_part.assign(sol->begin(), sol->begin() + genus);
    return cert;
}

} // namespace dirimg

#endif
