#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hball {

using Complex = std::complex<double>;

class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(std::size_t a, std::size_t b);
};

/// Thrown when a value violates a domain invariant (non-finite entry, point
/// outside the open ball, non-positive ellipsoid level, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Dense vector in C^n. Entries are always finite and n >= 1.
class CVec {
public:
    explicit CVec(std::vector<Complex> entries);
    CVec(std::initializer_list<Complex> entries);

    static CVec zeros(std::size_t dim);
    /// k-th standard basis vector (0-based).
    static CVec unit(std::size_t dim, std::size_t k);

    std::size_t dim() const noexcept { return entries_.size(); }
    const Complex& operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Complex> entries() const noexcept { return entries_; }

    /// Squared Euclidean norm, Neumaier-compensated.
    double norm_squared() const noexcept;
    double norm() const noexcept;

    CVec operator+(const CVec& other) const;
    CVec operator-(const CVec& other) const;
    CVec operator-() const;
    friend CVec operator*(Complex s, const CVec& v);
    friend CVec operator*(const CVec& v, Complex s) { return s * v; }
    CVec operator/(Complex s) const { return (1.0 / s) * *this; }

    bool operator==(const CVec&) const = default;

private:
    struct Unchecked {};
    CVec(std::vector<Complex> entries, Unchecked) noexcept : entries_(std::move(entries)) {}

    std::vector<Complex> entries_;
};

/// <a, b> = sum_i a_i * conj(b_i): linear in the first slot, conjugate-linear
/// in the second.
Complex inner(const CVec& a, const CVec& b);

/// Euclidean distance ||a - b||.
double distance(const CVec& a, const CVec& b);

/// ||a||^2 ||b||^2 - |<a,b>|^2 via the Lagrange identity (sum over i<j of
/// |a_i b_j - a_j b_i|^2); exact zero for parallel vectors.
double gram_defect(const CVec& a, const CVec& b);

void require_same_dim(const CVec& a, const CVec& b);

}  // namespace hball
