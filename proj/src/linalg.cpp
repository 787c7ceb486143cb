#include "hlspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hlspec {

RealSymmetricMatrix::RealSymmetricMatrix(int order)
    : n_(order), a_(static_cast<size_t>(order) * order, 0.0) {
    if (order < 0) throw std::invalid_argument("matrix order must be nonnegative");
}

void RealSymmetricMatrix::set(int i, int j, double value) {
    a_[static_cast<size_t>(i) * n_ + j] = value;
    a_[static_cast<size_t>(j) * n_ + i] = value;
}

double RealSymmetricMatrix::max_abs_row_sum() const {
    double best = 0.0;
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j) s += std::fabs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

HermitianMatrix::HermitianMatrix(int order)
    : n_(order), a_(static_cast<size_t>(order) * order, {0.0, 0.0}) {
    if (order < 0) throw std::invalid_argument("matrix order must be nonnegative");
}

void HermitianMatrix::set(int i, int j, std::complex<double> value) {
    if (i == j && value.imag() != 0.0)
        throw std::invalid_argument("diagonal entry of a Hermitian matrix must be real");
    a_[static_cast<size_t>(i) * n_ + j] = value;
    a_[static_cast<size_t>(j) * n_ + i] = std::conj(value);
}

double HermitianMatrix::max_abs_row_sum() const {
    double best = 0.0;
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j) s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), std::greater<double>());
}

namespace {

// Householder reduction of a symmetric matrix to tridiagonal form (d, e).
// Eigenvalue-only variant of the classical tred2; works on the lower
// triangle of a, which it destroys. e[0] is unused and set to 0.
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d, std::vector<double>& e) {
    auto at = [&a, n](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::fabs(at(i, k));
            if (scale == 0.0) {
                e[i] = at(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    at(i, k) /= scale;
                    h += at(i, k) * at(i, k);
                }
                double f = at(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                at(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
                    for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
                    e[j] = g / h;
                    f += e[j] * at(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = at(i, j);
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
                }
            }
        } else {
            e[i] = at(i, l);
        }
    }
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) d[i] = at(i, i);
}

// Implicit-shift QL on a symmetric tridiagonal matrix (diagonal d,
// subdiagonal e with e[0] unused). An off-diagonal element counts as zero
// once |e[m]| <= eps * (|d[m]| + |d[m+1]|). Each eigenvalue gets at most 60
// sweeps before the routine gives up loudly.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, int n) {
    constexpr int kMaxSweeps = 60;
    const double eps = std::numeric_limits<double>::epsilon();

    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == kMaxSweeps)
                    throw std::runtime_error("QL iteration failed to converge for eigenvalue index " +
                                             std::to_string(l));
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

Spectrum symmetric_spectrum(const RealSymmetricMatrix& m) {
    const int n = m.order();
    if (n == 0) return Spectrum{};
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m(i, j);
    std::vector<double> d(n, 0.0), e(n, 0.0);
    tridiagonalize(a, n, d, e);
    ql_implicit_shift(d, e, n);
    return Spectrum(std::move(d));
}

Spectrum hermitian_spectrum(const HermitianMatrix& m) {
    const int n = m.order();
    if (n == 0) return Spectrum{};

    RealSymmetricMatrix embed(2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const std::complex<double> z = m(i, j);
            embed.set(i, j, z.real());
            embed.set(n + i, n + j, z.real());
            // Im block is antisymmetric, so the embedding stays symmetric.
            embed.set(i, n + j, -z.imag());
            embed.set(j, n + i, z.imag());
        }
    }

    const Spectrum doubled = symmetric_spectrum(embed);
    const double pair_tol = 1e-9 * (1.0 + m.max_abs_row_sum());
    std::vector<double> values(n);
    for (int k = 0; k < n; ++k) {
        const double lo = doubled[2 * k];
        const double hi = doubled[2 * k + 1];
        if (std::fabs(lo - hi) > pair_tol)
            throw std::runtime_error("hermitian embedding produced an unpaired eigenvalue near " +
                                     std::to_string(lo));
        values[k] = lo;
    }
    return Spectrum(std::move(values));
}

std::complex<double> complex_determinant(ComplexMatrix m) {
    const int n = m.n;
    std::complex<double> det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(m.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(m.at(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) return {0.0, 0.0};
        if (pivot != col) {
            for (int c = col; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            det = -det;
        }
        const std::complex<double> diag = m.at(col, col);
        det *= diag;
        for (int r = col + 1; r < n; ++r) {
            const std::complex<double> factor = m.at(r, col) / diag;
            if (factor == std::complex<double>{0.0, 0.0}) continue;
            for (int c = col; c < n; ++c) m.at(r, c) -= factor * m.at(col, c);
        }
    }
    return det;
}

bool multiset_close(const Spectrum& s, const Spectrum& t, double tol) {
    if (s.size() != t.size()) return false;
    for (size_t i = 0; i < s.size(); ++i)
        if (std::fabs(s[i] - t[i]) > tol) return false;
    return true;
}

}  // namespace hlspec
