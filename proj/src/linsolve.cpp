#include "wzpi/linsolve.hpp"

#include "wzpi/errors.hpp"

#include <optional>
#include <tuple>
#include <utility>

namespace wzpi {

FieldElement::FieldElement(RatFunc value, VarMask field) : value_(std::move(value)), field_(field) {
    if ((value_.vars() & static_cast<VarMask>(~field_)) != 0)
        throw UsageError("field element involves variables outside its field");
}

namespace {

VarMask common_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field()) throw UsageError("arithmetic between different coefficient fields");
    return a.field();
}

} // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.value_ + b.value_, common_field(a, b));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.value_ - b.value_, common_field(a, b));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.value_ * b.value_, common_field(a, b));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.value_ / b.value_, common_field(a, b));
}

namespace {

// Fraction-free Gauss-Jordan (Bareiss update applied to every row). After
// elimination each pivot entry equals `det`, the last pivot, and all
// divisions along the way are exact.
struct Echelon {
    std::vector<std::vector<Polynomial>> m;
    std::vector<std::size_t> pivot_cols;
    Polynomial det{1};
};

Echelon fraction_free_rref(std::vector<std::vector<Polynomial>> m, std::size_t pivot_limit) {
    Echelon e;
    const std::size_t rows = m.size();
    const std::size_t width = rows ? m.front().size() : 0;
    Polynomial prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
        std::optional<std::size_t> best;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            const auto key = std::make_pair(m[i][c].total_degree(), m[i][c].term_count());
            if (!best || key < std::make_pair(m[*best][c].total_degree(), m[*best][c].term_count())) best = i;
        }
        if (!best) continue;
        std::swap(m[r], m[*best]);
        const Polynomial p = m[r][c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Polynomial f = m[i][c];
            for (std::size_t j = 0; j < width; ++j) {
                if (j == c) continue;
                Polynomial v = p * m[i][j];
                if (!f.is_zero() && !m[r][j].is_zero()) v -= f * m[r][j];
                m[i][j] = prev == Polynomial(1) ? v : exact_quotient(v, prev);
            }
            m[i][c] = Polynomial();
        }
        prev = p;
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.m = std::move(m);
    e.det = prev;
    return e;
}

} // namespace

std::vector<std::vector<Polynomial>> polynomial_nullspace(const std::vector<std::vector<Polynomial>>& matrix) {
    if (matrix.empty()) throw UsageError("polynomial_nullspace needs at least one row");
    const std::size_t cols = matrix.front().size();
    std::vector<std::vector<Polynomial>> m;
    for (const auto& row : matrix) {
        if (row.size() != cols) throw UsageError("ragged matrix");
        m.push_back(row);
    }
    const Echelon e = fraction_free_rref(std::move(m), cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Polynomial>> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Polynomial> v(cols);
        v[free] = e.det;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.m[i][free];
        out.push_back(std::move(v));
    }
    return out;
}

LinearSolution linsolve_exact(const std::vector<std::vector<FieldElement>>& matrix,
                              const std::vector<FieldElement>& rhs) {
    if (matrix.empty()) throw UsageError("linsolve_exact needs at least one row");
    if (rhs.size() != matrix.size()) throw UsageError("right-hand side length mismatch");
    const std::size_t rows = matrix.size();
    const std::size_t cols = matrix.front().size();
    const VarMask field = rhs.front().field();

    // Clear denominators row by row; the last column is the right-hand side.
    std::vector<std::vector<Polynomial>> m(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        if (matrix[i].size() != cols) throw UsageError("ragged matrix");
        std::vector<const RatFunc*> row;
        for (const auto& x : matrix[i]) {
            if (x.field() != field) throw UsageError("mixed coefficient fields in linear system");
            row.push_back(&x.value());
        }
        if (rhs[i].field() != field) throw UsageError("mixed coefficient fields in linear system");
        row.push_back(&rhs[i].value());
        Polynomial den(1);
        for (const RatFunc* x : row)
            if (!x->is_zero()) den = poly_lcm(den, x->denominator());
        for (const RatFunc* x : row)
            m[i].push_back(x->is_zero() ? Polynomial() : x->numerator() * exact_quotient(den, x->denominator()));
    }

    const Echelon e = fraction_free_rref(std::move(m), cols);
    const std::size_t rank = e.pivot_cols.size();
    LinearSolution out;
    out.consistent = true;
    for (std::size_t i = rank; i < rows; ++i)
        if (!e.m[i][cols].is_zero()) out.consistent = false;

    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    const FieldElement zero(RatFunc(), field);
    if (out.consistent) {
        out.particular.assign(cols, zero);
        for (std::size_t i = 0; i < rank; ++i)
            out.particular[e.pivot_cols[i]] = FieldElement(RatFunc(e.m[i][cols], e.det), field);
    }
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(cols, zero);
        v[free] = FieldElement(RatFunc(1), field);
        for (std::size_t i = 0; i < rank; ++i)
            if (!e.m[i][free].is_zero()) v[e.pivot_cols[i]] = FieldElement(RatFunc(-e.m[i][free], e.det), field);
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

} // namespace wzpi
