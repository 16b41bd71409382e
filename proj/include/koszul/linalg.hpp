#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "koszul/scalar.hpp"

namespace koszul {

/// Sparse vector: (index, value) pairs sorted by index, values nonzero.
using SVec = std::vector<std::pair<int, Scalar>>;

const Scalar* svec_get(const SVec& v, int index);
SVec svec_scale(const SVec& v, const Scalar& c);
/// a + c*b
SVec svec_axpy(const SVec& a, const Scalar& c, const SVec& b);
SVec svec_add(const SVec& a, const SVec& b);
SVec svec_sub(const SVec& a, const SVec& b);
SVec svec_neg(const SVec& a);
bool svec_equal(const SVec& a, const SVec& b);
/// Shift every index by delta (for block embeddings).
SVec svec_shift(const SVec& v, int delta);

/// Sparse matrix with immutable dimensions. Rows are sparse vectors; absent
/// entries are zero.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    static Matrix from_rows(int cols, std::vector<SVec> rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const SVec& row(int i) const { return rows_[i]; }
    const std::vector<SVec>& row_data() const { return rows_; }

    void set(int i, int j, const Scalar& value);
    Scalar get(const Field& k, int i, int j) const;
    Matrix transpose() const;

    bool operator==(const Matrix& o) const;

private:
    int cols_ = 0;
    std::vector<SVec> rows_;
};

struct RrefResult {
    Matrix mat;                // nonzero rows of the reduced row echelon form
    std::vector<int> pivots;   // pivot column of each row, strictly increasing
    int rank = 0;
};

/// Unique reduced row echelon form (zero rows dropped).
RrefResult rref(const Matrix& m);

/// Row space of a matrix in canonical (RREF) form.
class Subspace {
public:
    Subspace() = default;
    static Subspace from_rows(int ambient, std::vector<SVec> rows);
    static Subspace zero(int ambient);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<SVec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// v reduced modulo the row space (zero iff v is contained in it).
    SVec reduce(SVec v) const;
    bool contains(const SVec& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const;

private:
    int ambient_ = 0;
    std::vector<SVec> basis_;
    std::vector<int> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Coefficients expressing target in the span of the given vectors, or
/// nullopt when target is outside the span. The coefficients are unique when
/// the vectors are linearly independent.
std::optional<std::vector<Scalar>> solve_in_span(const Field& k,
                                                 const std::vector<SVec>& vectors,
                                                 const SVec& target);

/// Eliminates a spanning set once and answers membership queries for many
/// targets against it.
class SpanSolver {
public:
    SpanSolver(const Field& k, std::vector<SVec> vectors);
    SpanSolver(SpanSolver&&) noexcept;
    ~SpanSolver();

    std::optional<std::vector<Scalar>> solve(const SVec& target) const;
    int count() const { return count_; }

private:
    struct Impl;
    Field field_;
    int count_ = 0;
    std::unique_ptr<Impl> impl_;
};

/// Canonical basis of { x : sum_i x_i rows_i = 0 } (coefficient vectors).
std::vector<SVec> left_kernel(const Field& k, const std::vector<SVec>& rows, int cols);

}  // namespace koszul
