#include "hball/cvec.hpp"

#include <cmath>

namespace hball {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace

DimensionMismatch::DimensionMismatch(std::size_t a, std::size_t b)
    : std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}

CVec::CVec(std::vector<Complex> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw DomainError("CVec must have dimension >= 1");
    }
    for (const auto& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw DomainError("CVec entries must be finite");
        }
    }
}

CVec::CVec(std::initializer_list<Complex> entries) : CVec(std::vector<Complex>(entries)) {}

CVec CVec::zeros(std::size_t dim) {
    if (dim == 0) {
        throw DomainError("CVec must have dimension >= 1");
    }
    return CVec(std::vector<Complex>(dim), Unchecked{});
}

CVec CVec::unit(std::size_t dim, std::size_t k) {
    if (k >= dim) {
        throw DomainError("basis index out of range");
    }
    auto v = std::vector<Complex>(dim);
    v[k] = 1.0;
    return CVec(std::move(v), Unchecked{});
}

double CVec::norm_squared() const noexcept {
    CompensatedSum s;
    for (const auto& z : entries_) {
        s.add(z.real() * z.real());
        s.add(z.imag() * z.imag());
    }
    return s.value();
}

double CVec::norm() const noexcept { return std::sqrt(norm_squared()); }

CVec CVec::operator+(const CVec& other) const {
    require_same_dim(*this, other);
    auto out = entries_;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += other.entries_[i];
    }
    return CVec(std::move(out));
}

CVec CVec::operator-(const CVec& other) const {
    require_same_dim(*this, other);
    auto out = entries_;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= other.entries_[i];
    }
    return CVec(std::move(out));
}

CVec CVec::operator-() const {
    auto out = entries_;
    for (auto& z : out) {
        z = -z;
    }
    return CVec(std::move(out), Unchecked{});
}

CVec operator*(Complex s, const CVec& v) {
    auto out = v.entries_;
    for (auto& z : out) {
        z *= s;
    }
    return CVec(std::move(out));
}

void require_same_dim(const CVec& a, const CVec& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(a.dim(), b.dim());
    }
}

Complex inner(const CVec& a, const CVec& b) {
    require_same_dim(a, b);
    CompensatedSum re;
    CompensatedSum im;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Complex p = a[i] * std::conj(b[i]);
        re.add(p.real());
        im.add(p.imag());
    }
    return {re.value(), im.value()};
}

double distance(const CVec& a, const CVec& b) {
    require_same_dim(a, b);
    CompensatedSum s;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s.add(std::norm(a[i] - b[i]));
    }
    return std::sqrt(s.value());
}

double gram_defect(const CVec& a, const CVec& b) {
    require_same_dim(a, b);
    CompensatedSum s;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            s.add(std::norm(a[i] * b[j] - a[j] * b[i]));
        }
    }
    return s.value();
}

}  // namespace hball
