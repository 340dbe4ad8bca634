#ifndef DIRIMG_EXACT_HPP
#define DIRIMG_EXACT_HPP

// Exact rational and Gaussian-rational arithmetic plus dense linear algebra
// over those fields. Everything here is zero-tolerance: ranks and kernels
// are certificates, not numerical estimates.

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dirimg/errors.hpp"

namespace dirimg {

using Rational = boost::multiprecision::mpq_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

/// Parse "p/q", an integer, or a plain decimal ("-0.25", "1.5e-3") exactly.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw Error(ErrorKind::input, "empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        try {
            Rational num(s.substr(0, slash));
            Rational den(s.substr(slash + 1));
            if (den == 0) throw Error(ErrorKind::input, "zero denominator in '" + s + "'");
            return num / den;
        } catch (const std::exception&) {
            throw Error(ErrorKind::input, "bad rational literal '" + s + "'");
        }
    }
    // decimal / integer with optional exponent
    std::size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = (s[pos++] == '-');
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c == '.') {
            if (seen_dot) throw Error(ErrorKind::input, "bad decimal '" + s + "'");
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (c == 'e' || c == 'E') {
            break;
        } else {
            throw Error(ErrorKind::input, "bad decimal '" + s + "'");
        }
    }
    long expo = 0;
    if (pos < s.size()) {
        try {
            expo = std::stol(s.substr(pos + 1));
        } catch (const std::exception&) {
            throw Error(ErrorKind::input, "bad exponent in '" + s + "'");
        }
    }
    if (!seen_digit) throw Error(ErrorKind::input, "bad decimal '" + s + "'");
    auto first = digits.find_first_not_of('0'); // avoid octal interpretation
    digits = first == std::string::npos ? "0" : digits.substr(first);
    Rational v(boost::multiprecision::mpz_int(digits).convert_to<Rational>());
    long net = expo - frac_digits;
    Rational ten(10);
    for (long i = 0; i < net; ++i) v *= ten;
    for (long i = 0; i < -net; ++i) v /= ten;
    return neg ? -v : v;
}

inline std::string to_string(const Rational& r) { return r.str(); }

/// Element of Q(i).
struct GaussianRational {
    Rational re{0}, im{0};

    GaussianRational() = default;
    GaussianRational(long v) : re(v) {}
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw Error(ErrorKind::internal, "division by zero Gaussian rational");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
};

inline std::complex<double> to_complex(const GaussianRational& g) {
    return {to_double(g.re), to_double(g.im)};
}

inline std::string to_string(const GaussianRational& g) {
    if (g.im == 0) return g.re.str();
    Rational mag = g.im < 0 ? Rational(-g.im) : g.im;
    return g.re.str() + (g.im < 0 ? "-" : "+") + mag.str() + "i";
}

template <class K> inline bool exact_is_zero(const K& v) { return v == K(0); }
inline bool exact_is_zero(const GaussianRational& v) { return v.is_zero(); }

/// Dense matrix over an exact field. Row-major.
template <class K>
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    K& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    /// Reduce in place to reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t piv = row;
            while (piv < rows_ && exact_is_zero(at(piv, col))) ++piv;
            if (piv == rows_) continue;
            if (piv != row)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(row, j));
            K inv = K(1) / at(row, col);
            for (std::size_t j = col; j < cols_; ++j) at(row, j) = at(row, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || exact_is_zero(at(i, col))) continue;
                K f = at(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    at(i, j) = at(i, j) - f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        ExactMatrix tmp(*this);
        return tmp.rref().size();
    }

    /// Basis of the right null space, one column vector per basis element.
    std::vector<std::vector<K>> kernel_basis() const {
        ExactMatrix tmp(*this);
        auto pivots = tmp.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
            if (is_pivot[free_col]) continue;
            std::vector<K> v(cols_, K(0));
            v[free_col] = K(1);
            for (std::size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = -tmp.at(r, free_col);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// One solution of A x = b, or nullopt when inconsistent.
    std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
        if (b.size() != rows_) throw Error(ErrorKind::internal, "solve: size mismatch");
        ExactMatrix aug(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<K> x(cols_, K(0));
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
        return x;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> a_;
};

/// Polynomial over an exact field, ascending coefficients.
template <class K>
struct ExactPoly {
    std::vector<K> c;

    ExactPoly() = default;
    explicit ExactPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && exact_is_zero(c.back())) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return c.empty() ? -1 : long(c.size()) - 1; }
    K coeff(std::size_t k) const { return k < c.size() ? c[k] : K(0); }

    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
        if (a.is_zero() || b.is_zero()) return ExactPoly();
        std::vector<K> r(a.c.size() + b.c.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r[i + j] = r[i + j] + a.c[i] * b.c[j];
        return ExactPoly(std::move(r));
    }
    friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
        std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return ExactPoly(std::move(r));
    }
    friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) {
        std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return ExactPoly(std::move(r));
    }

    ExactPoly derivative() const {
        if (c.size() <= 1) return ExactPoly();
        std::vector<K> r(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * K(long(i));
        return ExactPoly(std::move(r));
    }

    ExactPoly shifted(std::size_t k) const { // multiply by z^k
        if (is_zero()) return ExactPoly();
        std::vector<K> r(c.size() + k, K(0));
        for (std::size_t i = 0; i < c.size(); ++i) r[i + k] = c[i];
        return ExactPoly(std::move(r));
    }
};

} // namespace dirimg

#endif
