#include "qudigit/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qudigit {

namespace {

constexpr std::int64_t kMaxDim = 4096;

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::int64_t n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("matrix dimension must be positive");
    if (n > kMaxDim) throw std::invalid_argument("matrix dimension exceeds dense limit");
    a_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(std::int64_t n) {
    ComplexMatrix m(n);
    for (std::int64_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b);
    const std::int64_t n = a.dim();
    ComplexMatrix c(n);
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t k = 0; k < n; ++k) {
            const auto aik = a.at(i, k);
            if (aik == std::complex<double>{0.0, 0.0}) continue;
            for (std::int64_t j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    }
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    const std::int64_t n = a.dim();
    ComplexMatrix c(n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) c.at(i, j) = std::conj(a.at(j, i));
    return c;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b);
    const std::int64_t n = a.dim();
    ComplexMatrix c(n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b);
    const std::int64_t n = a.dim();
    ComplexMatrix c(n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

ComplexMatrix scale(std::complex<double> c, const ComplexMatrix& a) {
    const std::int64_t n = a.dim();
    ComplexMatrix out(n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) out.at(i, j) = c * a.at(i, j);
    return out;
}

std::complex<double> trace(const ComplexMatrix& a) {
    std::complex<double> t = 0.0;
    for (std::int64_t i = 0; i < a.dim(); ++i) t += a.at(i, i);
    return t;
}

std::vector<std::complex<double>> apply(const ComplexMatrix& a,
                                        const std::vector<std::complex<double>>& v) {
    const std::int64_t n = a.dim();
    if (static_cast<std::int64_t>(v.size()) != n)
        throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n), {0.0, 0.0});
    for (std::int64_t i = 0; i < n; ++i) {
        std::complex<double> acc = 0.0;
        for (std::int64_t j = 0; j < n; ++j) acc += a.at(i, j) * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& z : a.data()) s += std::norm(z);
    return std::sqrt(s);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b);
    double s = 0.0;
    const std::int64_t n = a.dim();
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) s += std::norm(a.at(i, j) - b.at(i, j));
    return std::sqrt(s);
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    const std::int64_t n = a.dim();
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            if (std::abs(a.at(i, j) - std::conj(a.at(j, i))) > tol) return false;
    return true;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
    const ComplexMatrix p = matmul(a, adjoint(a));
    return frobenius_distance(p, ComplexMatrix::identity(a.dim())) <= tol;
}

bool is_permutation(const ComplexMatrix& a, double tol) {
    const std::int64_t n = a.dim();
    std::vector<int> row_ones(static_cast<std::size_t>(n), 0);
    std::vector<int> col_ones(static_cast<std::size_t>(n), 0);
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            const auto& z = a.at(i, j);
            if (std::abs(z - std::complex<double>{1.0, 0.0}) <= tol) {
                ++row_ones[static_cast<std::size_t>(i)];
                ++col_ones[static_cast<std::size_t>(j)];
            } else if (std::abs(z) > tol) {
                return false;
            }
        }
    }
    for (std::int64_t i = 0; i < n; ++i)
        if (row_ones[static_cast<std::size_t>(i)] != 1 || col_ones[static_cast<std::size_t>(i)] != 1)
            return false;
    return true;
}

}  // namespace qudigit
