#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;

// ----------------------------- Matrix ---------------------------------------

// Dense row-major complex matrix fixed to the two sizes this library needs:
// 2x2 single-qubit factors and 4x4 two-qubit operators.
class Matrix {
public:
    explicit Matrix(int dim);
    static Matrix zero(int dim) { return Matrix(dim); }
    static Matrix identity(int dim);

    int dim() const noexcept { return dim_; }

    Complex& operator()(int r, int c) noexcept { return a_[r * dim_ + c]; }
    const Complex& operator()(int r, int c) const noexcept { return a_[r * dim_ + c]; }

    Matrix adjoint() const;
    Complex trace() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(Complex scale);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Complex scale, Matrix m) { return m *= scale; }
    friend Matrix operator*(Matrix m, Complex scale) { return m *= scale; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

private:
    int dim_;
    std::array<Complex, 16> a_{}; // first dim_*dim_ entries used
};

double max_abs(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);
bool is_hermitian(const Matrix& m, double tol = 1e-12);
Matrix commutator(const Matrix& a, const Matrix& b);

// Pauli operator in direction axis (1 = x, 2 = y, 3 = z), {|0>,|1>} basis.
Matrix pauli(int axis);

// ----------------------------- Operations -----------------------------------

enum class Subsystem { A, B };

using Spectrum = std::vector<double>;

// Kronecker product of two 2x2 factors, A's index major.
Matrix tensor(const Matrix& a, const Matrix& b);

// Reduced operator of one qubit of a two-qubit density matrix.
Matrix partial_trace(const Matrix& rho, Subsystem keep);

// Real eigenvalues in descending order. Closed form for 2x2; cyclic Jacobi
// sweeps for 4x4 (until off-diagonal Frobenius norm < 1e-14, max 64 sweeps).
Spectrum hermitian_eigenvalues(const Matrix& m);

// S(rho) = -sum lambda log2 lambda in bits, with 0 log 0 = 0. Eigenvalues in
// [-1e-10, 0) are clamped to zero; anything lower is rejected.
double von_neumann_entropy(const Matrix& m);

// Shannon entropy in bits of a probability list (same clamping rule).
double shannon_entropy_bits(std::span<const double> probs);

// x log2 x with the 0 log 0 = 0 convention.
double xlog2x(double x);

// Throws NotAStateError unless m is Hermitian, unit-trace and PSD within the
// tolerances above.
void validate_density(const Matrix& m);

namespace detail {
// Partial trace without the density-matrix validation; used on unnormalized
// measured operators whose trace is an outcome probability.
Matrix partial_trace_raw(const Matrix& rho, Subsystem keep);
// Eigenvalues {lo, hi} of a 2x2 Hermitian matrix, closed form.
std::array<double, 2> eig2(const Matrix& m);
} // namespace detail

} // namespace qcorr
