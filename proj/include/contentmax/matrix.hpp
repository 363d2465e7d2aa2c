#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "contentmax/label.hpp"

namespace contentmax {

/// Square matrix of nonnegative exact rationals, row-major.
class LabeledMatrix {
public:
    LabeledMatrix() = default;
    /// Zero matrix of the given dimension.
    explicit LabeledMatrix(std::size_t dim);
    /// Throws std::invalid_argument unless rows form a square matrix.
    explicit LabeledMatrix(const std::vector<std::vector<Label>>& rows);

    std::size_t dim() const { return dim_; }

    const Label& at(std::size_t row, std::size_t col) const { return entries_.at(row * dim_ + col); }
    Label& at(std::size_t row, std::size_t col) { return entries_.at(row * dim_ + col); }

    friend bool operator==(const LabeledMatrix&, const LabeledMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Label> entries_;
};

LabeledMatrix operator*(const LabeledMatrix& a, const LabeledMatrix& b);

/// A^k for k >= 1 by repeated squaring. Throws std::invalid_argument for k == 0.
LabeledMatrix mat_pow(const LabeledMatrix& a, std::uint64_t k);

/// |A|, the sum of all entries.
Label mat_weight(const LabeledMatrix& a);

/// Decided on the support digraph: a nonnegative matrix is nilpotent iff
/// the digraph of its nonzero entries has no directed cycle.
bool is_nilpotent(const LabeledMatrix& a);

/// Cross-check mode: A^n == 0 with n = dim.
bool is_nilpotent_by_power(const LabeledMatrix& a);

}  // namespace contentmax
