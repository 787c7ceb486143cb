#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hlspec {

// Dense real symmetric matrix. set() writes both (i,j) and (j,i), so the
// storage can never go out of symmetry.
class RealSymmetricMatrix {
public:
    explicit RealSymmetricMatrix(int order);

    int order() const { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, double value);

    // Largest absolute row sum; cheap upper bound on the spectral radius.
    double max_abs_row_sum() const;

private:
    int n_;
    std::vector<double> a_;
};

// Dense complex Hermitian matrix. set() mirrors the conjugate entry exactly;
// diagonal entries must be real.
class HermitianMatrix {
public:
    explicit HermitianMatrix(int order);

    int order() const { return n_; }
    std::complex<double> operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, std::complex<double> value);

    double max_abs_row_sum() const;

private:
    int n_;
    std::vector<std::complex<double>> a_;
};

// Real eigenvalue list, always sorted descending: values()[0] is the largest.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<double> values);

    size_t size() const { return values_.size(); }
    double operator[](size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

// Square complex matrix in row-major order, used for determinant evaluation.
struct ComplexMatrix {
    int n = 0;
    std::vector<std::complex<double>> a;

    explicit ComplexMatrix(int order)
        : n(order), a(static_cast<size_t>(order) * order) {}
    std::complex<double>& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const std::complex<double>& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// All eigenvalues of a real symmetric matrix: Householder tridiagonalization
// followed by implicit-shift QL. Throws std::runtime_error if an eigenvalue
// fails to converge within the iteration cap.
Spectrum symmetric_spectrum(const RealSymmetricMatrix& m);

// All (real) eigenvalues of a Hermitian matrix, computed through the 2n x 2n
// real embedding [[Re, -Im], [Im, Re]] whose spectrum is that of the input
// with every multiplicity doubled. Throws if the doubled pairing is broken.
Spectrum hermitian_spectrum(const HermitianMatrix& m);

// Determinant by row-pivoted Gaussian elimination with row-swap sign
// tracking. A singular matrix yields exactly 0.
std::complex<double> complex_determinant(ComplexMatrix m);

// True iff both spectra have the same length and agree elementwise within
// tol after descending sort (which Spectrum maintains by construction).
bool multiset_close(const Spectrum& s, const Spectrum& t, double tol);

}  // namespace hlspec
