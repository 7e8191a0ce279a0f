#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kPsdTol = 1e-10;       // eigenvalues above this are clamped to 0
constexpr double kTraceTol = 1e-9;
constexpr double kHermitianTol = 1e-12;

void check_dim(int dim) {
    if (dim != 2 && dim != 4) {
        throw std::invalid_argument("matrix dimension must be 2 or 4, got " + std::to_string(dim));
    }
}

} // namespace

// ----------------------------- Matrix ---------------------------------------

Matrix::Matrix(int dim) : dim_(dim) {
    check_dim(dim);
}

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

Complex Matrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch in +");
    for (int i = 0; i < dim_ * dim_; ++i) a_[i] += rhs.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch in -");
    for (int i = 0; i < dim_ * dim_; ++i) a_[i] -= rhs.a_[i];
    return *this;
}

Matrix& Matrix::operator*=(Complex scale) {
    for (int i = 0; i < dim_ * dim_; ++i) a_[i] *= scale;
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch in *");
    const int n = lhs.dim_;
    Matrix out(n);
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            const Complex v = lhs(r, k);
            if (v == 0.0) continue;
            for (int c = 0; c < n; ++c) out(r, c) += v * rhs(k, c);
        }
    }
    return out;
}

double max_abs(const Matrix& m) {
    double mx = 0.0;
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) mx = std::max(mx, std::abs(m(r, c)));
    return mx;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch in max_abs_diff");
    double mx = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) mx = std::max(mx, std::abs(a(r, c) - b(r, c)));
    return mx;
}

bool is_hermitian(const Matrix& m, double tol) {
    for (int r = 0; r < m.dim(); ++r)
        for (int c = r; c < m.dim(); ++c)
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
    return true;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    return a * b - b * a;
}

Matrix pauli(int axis) {
    Matrix m(2);
    switch (axis) {
        case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case 2: m(0, 1) = Complex(0.0, -1.0); m(1, 0) = Complex(0.0, 1.0); break;
        case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
        default: throw std::invalid_argument("pauli axis must be 1, 2 or 3");
    }
    return m;
}

// ----------------------------- Operations -----------------------------------

Matrix tensor(const Matrix& a, const Matrix& b) {
    if (a.dim() != 2 || b.dim() != 2) {
        throw std::invalid_argument("tensor requires two 2x2 factors");
    }
    Matrix out(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

namespace detail {

Matrix partial_trace_raw(const Matrix& rho, Subsystem keep) {
    Matrix out(2);
    if (keep == Subsystem::A) {
        for (int a = 0; a < 2; ++a)
            for (int ap = 0; ap < 2; ++ap)
                out(a, ap) = rho(2 * a + 0, 2 * ap + 0) + rho(2 * a + 1, 2 * ap + 1);
    } else {
        for (int b = 0; b < 2; ++b)
            for (int bp = 0; bp < 2; ++bp)
                out(b, bp) = rho(0 + b, 0 + bp) + rho(2 + b, 2 + bp);
    }
    return out;
}

std::array<double, 2> eig2(const Matrix& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double half = 0.5 * (a - d);
    const double r = std::sqrt(half * half + std::norm(m(0, 1)));
    const double mean = 0.5 * (a + d);
    return {mean + r, mean - r};
}

} // namespace detail

Matrix partial_trace(const Matrix& rho, Subsystem keep) {
    if (rho.dim() != 4) throw std::invalid_argument("partial_trace requires a 4x4 operator");
    if (!is_hermitian(rho, kHermitianTol)) {
        throw std::invalid_argument("partial_trace requires a Hermitian operator");
    }
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        std::ostringstream msg;
        msg << "partial_trace requires unit trace, got " << tr;
        throw NotAStateError(msg.str());
    }
    return detail::partial_trace_raw(rho, keep);
}

namespace {

// One cyclic Jacobi sweep over the strict upper triangle.
void jacobi_sweep(Matrix& m) {
    const int n = m.dim();
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const Complex apq = m(p, q);
            const double mag = std::abs(apq);
            if (mag < 1e-300) continue;
            const Complex phase = apq / mag;
            const double tau = (m(q, q).real() - m(p, p).real()) / (2.0 * mag);
            const double sgn = tau >= 0.0 ? 1.0 : -1.0;
            const double t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;

            // R differs from identity only in the (p,q) plane:
            //   R(p,p) = c, R(p,q) = s*phase, R(q,p) = -s*conj(phase), R(q,q) = c.
            // Apply m <- R^dag m R by updating columns then rows.
            for (int r = 0; r < n; ++r) {
                const Complex mp = m(r, p);
                const Complex mq = m(r, q);
                m(r, p) = c * mp - s * std::conj(phase) * mq;
                m(r, q) = s * phase * mp + c * mq;
            }
            for (int col = 0; col < n; ++col) {
                const Complex mp = m(p, col);
                const Complex mq = m(q, col);
                m(p, col) = c * mp - s * phase * mq;
                m(q, col) = s * std::conj(phase) * mp + c * mq;
            }
        }
    }
}

double offdiag_frobenius(const Matrix& m) {
    double sum = 0.0;
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c)
            if (r != c) sum += std::norm(m(r, c));
    return std::sqrt(sum);
}

} // namespace

Spectrum hermitian_eigenvalues(const Matrix& m) {
    if (!is_hermitian(m, kHermitianTol)) {
        throw std::invalid_argument("hermitian_eigenvalues requires a Hermitian matrix");
    }
    Spectrum eigs;
    if (m.dim() == 2) {
        const auto e = detail::eig2(m);
        eigs = {e[0], e[1]};
    } else {
        Matrix work = m;
        for (int sweep = 0; sweep < 64; ++sweep) {
            if (offdiag_frobenius(work) < 1e-14) break;
            jacobi_sweep(work);
        }
        eigs = {work(0, 0).real(), work(1, 1).real(), work(2, 2).real(), work(3, 3).real()};
        std::sort(eigs.begin(), eigs.end(), std::greater<>());
    }
    return eigs;
}

double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

double shannon_entropy_bits(std::span<const double> probs) {
    double s = 0.0;
    for (double p : probs) {
        if (p < 0.0) {
            if (p < -kPsdTol) {
                std::ostringstream msg;
                msg << "negative probability " << p << " in spectrum";
                throw NotAStateError(msg.str());
            }
            continue; // clamped to zero
        }
        s -= xlog2x(p);
    }
    return s;
}

void validate_density(const Matrix& m) {
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        std::ostringstream msg;
        msg << "density matrix must have unit trace, got " << tr;
        throw NotAStateError(msg.str());
    }
    const Spectrum eigs = hermitian_eigenvalues(m); // throws if not Hermitian
    if (eigs.back() < -kPsdTol) {
        std::ostringstream msg;
        msg << "not a state: eigenvalue " << eigs.back() << " below -1e-10";
        throw NotAStateError(msg.str());
    }
}

double von_neumann_entropy(const Matrix& m) {
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        std::ostringstream msg;
        msg << "entropy requires unit trace, got " << tr;
        throw NotAStateError(msg.str());
    }
    const Spectrum eigs = hermitian_eigenvalues(m);
    if (eigs.back() < -kPsdTol) {
        std::ostringstream msg;
        msg << "not a state: eigenvalue " << eigs.back() << " below -1e-10";
        throw NotAStateError(msg.str());
    }
    return shannon_entropy_bits(eigs);
}

} // namespace qcorr
