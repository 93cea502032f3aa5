#pragma once

#include "wzpi/ratfunc.hpp"

#include <vector>

namespace wzpi {

/// A coefficient-field element tagged with its field: the set of parameters
/// it may involve (0 = Q, K = Q(k), K|Z = Q(k, z)). Arithmetic between
/// different tags is a UsageError.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(RatFunc value, VarMask field);

    const RatFunc& value() const noexcept { return value_; }
    VarMask field() const noexcept { return field_; }
    bool is_zero() const noexcept { return value_.is_zero(); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

private:
    RatFunc value_;
    VarMask field_ = 0;
};

struct LinearSolution {
    bool consistent = false;
    std::vector<FieldElement> particular;
    std::vector<std::vector<FieldElement>> nullspace;
};

/// Exact fraction-free Gauss-Jordan elimination over a single tagged field
/// (rows are cleared of denominators first). The pivot in each column is the
/// candidate of lowest total degree, then fewest terms.
/// Free columns are zero in the particular solution; the nullspace has one
/// basis vector per free column with a 1 in that column.
LinearSolution linsolve_exact(const std::vector<std::vector<FieldElement>>& matrix,
                              const std::vector<FieldElement>& rhs);

/// Nullspace of a polynomial matrix with polynomial basis vectors: one per
/// free column, carrying the elimination determinant in that column.
std::vector<std::vector<Polynomial>> polynomial_nullspace(const std::vector<std::vector<Polynomial>>& matrix);

} // namespace wzpi
