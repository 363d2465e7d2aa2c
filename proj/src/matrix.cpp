#include "contentmax/matrix.hpp"

#include <stdexcept>

#include "contentmax/digraph.hpp"

namespace contentmax {

LabeledMatrix::LabeledMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

LabeledMatrix::LabeledMatrix(const std::vector<std::vector<Label>>& rows) : dim_(rows.size()) {
    entries_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) throw std::invalid_argument("matrix is not square");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

LabeledMatrix operator*(const LabeledMatrix& a, const LabeledMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
    const std::size_t n = a.dim();
    LabeledMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            const Label& ail = a.at(i, l);
            if (ail.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Label& blj = b.at(l, j);
                if (!blj.is_zero()) c.at(i, j) += ail * blj;
            }
        }
    }
    return c;
}

LabeledMatrix mat_pow(const LabeledMatrix& a, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("mat_pow: exponent must be at least 1");
    LabeledMatrix result = a;
    LabeledMatrix base = a;
    --k;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

Label mat_weight(const LabeledMatrix& a) {
    Label total;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) total += a.at(i, j);
    }
    return total;
}

bool is_nilpotent(const LabeledMatrix& a) {
    return is_dag(from_adjacency(a));
}

bool is_nilpotent_by_power(const LabeledMatrix& a) {
    if (a.dim() == 0) return true;
    return mat_weight(mat_pow(a, a.dim())).is_zero();
}

}  // namespace contentmax
