#ifndef DIRIMG_POLY_HPP
#define DIRIMG_POLY_HPP

// Small dense complex polynomial helpers, ascending coefficient order.

#include <complex>
#include <vector>

#include "dirimg/errors.hpp"

namespace dirimg {

using cplx = std::complex<double>;
using Poly = std::vector<cplx>;

inline cplx poly_eval(const Poly& p, cplx z) {
    cplx v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * z + p[i];
    return v;
}

inline Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * double(i);
    return d;
}

inline long poly_degree(const Poly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (std::abs(p[i]) != 0.0) return long(i);
    return -1;
}

inline Poly poly_from_roots(const std::vector<cplx>& roots, cplx lead = 1.0) {
    Poly p{lead};
    for (cplx r : roots) {
        Poly q(p.size() + 1, 0.0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i + 1] += p[i];
            q[i] -= r * p[i];
        }
        p = std::move(q);
    }
    return p;
}

inline Poly poly_add_scaled(const Poly& a, cplx s, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += s * b[i];
    return r;
}

} // namespace dirimg

#endif
