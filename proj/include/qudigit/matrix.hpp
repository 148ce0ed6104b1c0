#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qudigit {

// Dense square complex matrix in the decreasing-value basis ordering shared
// by the whole artifact. Row-major storage.
class ComplexMatrix {
public:
    using Complex = std::complex<double>;

    ComplexMatrix() = default;
    explicit ComplexMatrix(std::int64_t n);

    static ComplexMatrix identity(std::int64_t n);

    std::int64_t dim() const { return n_; }

    Complex& at(std::int64_t i, std::int64_t j) {
        return a_[static_cast<std::size_t>(i * n_ + j)];
    }
    const Complex& at(std::int64_t i, std::int64_t j) const {
        return a_[static_cast<std::size_t>(i * n_ + j)];
    }

    const std::vector<Complex>& data() const { return a_; }

private:
    std::int64_t n_ = 0;
    std::vector<Complex> a_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(std::complex<double> c, const ComplexMatrix& a);

std::complex<double> trace(const ComplexMatrix& a);
std::vector<std::complex<double>> apply(const ComplexMatrix& a,
                                        const std::vector<std::complex<double>>& v);

double frobenius_norm(const ComplexMatrix& a);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double tol = 1e-12);
bool is_unitary(const ComplexMatrix& a, double tol = 1e-12);

// True when every entry is within tol of 0 or 1 and each row and column
// holds exactly one 1.
bool is_permutation(const ComplexMatrix& a, double tol = 1e-12);

}  // namespace qudigit
