#include "koszul/linalg.hpp"

#include <algorithm>
#include <map>

namespace koszul {

const Scalar* svec_get(const SVec& v, int index) {
    auto it = std::lower_bound(v.begin(), v.end(), index,
                               [](const auto& e, int i) { return e.first < i; });
    if (it != v.end() && it->first == index) return &it->second;
    return nullptr;
}

SVec svec_scale(const SVec& v, const Scalar& c) {
    if (c.is_zero()) return {};
    SVec out;
    out.reserve(v.size());
    for (const auto& [i, x] : v) {
        Scalar y = x * c;
        if (!y.is_zero()) out.emplace_back(i, y);
    }
    return out;
}

SVec svec_axpy(const SVec& a, const Scalar& c, const SVec& b) {
    if (c.is_zero()) return a;
    SVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Scalar y = c * b[j].second;
            if (!y.is_zero()) out.emplace_back(b[j].first, y);
            ++j;
        } else {
            Scalar y = a[i].second + c * b[j].second;
            if (!y.is_zero()) out.emplace_back(a[i].first, y);
            ++i;
            ++j;
        }
    }
    return out;
}

SVec svec_add(const SVec& a, const SVec& b) {
    SVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            Scalar y = a[i].second + b[j].second;
            if (!y.is_zero()) out.emplace_back(a[i].first, y);
            ++i;
            ++j;
        }
    }
    return out;
}

SVec svec_sub(const SVec& a, const SVec& b) {
    SVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -b[j].second);
            ++j;
        } else {
            Scalar y = a[i].second - b[j].second;
            if (!y.is_zero()) out.emplace_back(a[i].first, y);
            ++i;
            ++j;
        }
    }
    return out;
}

SVec svec_neg(const SVec& a) {
    SVec out;
    out.reserve(a.size());
    for (const auto& [i, x] : a) out.emplace_back(i, -x);
    return out;
}

bool svec_equal(const SVec& a, const SVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].first != b[i].first || a[i].second != b[i].second) return false;
    }
    return true;
}

SVec svec_shift(const SVec& v, int delta) {
    SVec out;
    out.reserve(v.size());
    for (const auto& [i, x] : v) out.emplace_back(i + delta, x);
    return out;
}

Matrix::Matrix(int rows, int cols) : cols_(cols), rows_(rows) {}

Matrix Matrix::from_rows(int cols, std::vector<SVec> rows) {
    Matrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

void Matrix::set(int i, int j, const Scalar& value) {
    SVec& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const auto& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
        if (value.is_zero()) {
            r.erase(it);
        } else {
            it->second = value;
        }
    } else if (!value.is_zero()) {
        r.insert(it, {j, value});
    }
}

Scalar Matrix::get(const Field& k, int i, int j) const {
    const Scalar* s = svec_get(rows_[i], j);
    return s ? *s : k.zero();
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows());
    std::vector<SVec> trows(cols_);
    for (int i = 0; i < rows(); ++i) {
        for (const auto& [j, x] : rows_[i]) trows[j].emplace_back(i, x);
    }
    t.rows_ = std::move(trows);
    return t;
}

bool Matrix::operator==(const Matrix& o) const {
    if (cols_ != o.cols_ || rows_.size() != o.rows_.size()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!svec_equal(rows_[i], o.rows_[i])) return false;
    }
    return true;
}

namespace {

// Incremental Gauss-Jordan elimination. Pivots are chosen among columns
// < main_cols; columns beyond ride along (used for combination tracking and
// the Zassenhaus intersection). Kept rows are fully reduced, so the main
// part is always the unique RREF of what has been fed in.
class Echelon {
public:
    explicit Echelon(int main_cols) : main_cols_(main_cols) {}

    SVec reduce(SVec v) const {
        for (;;) {
            int hit = -1;
            std::size_t row_pos = 0;
            for (const auto& [col, x] : v) {
                if (col >= main_cols_) break;
                auto it = pivot_row_.find(col);
                if (it != pivot_row_.end()) {
                    hit = col;
                    row_pos = it->second;
                    break;
                }
            }
            if (hit < 0) return v;
            const Scalar* coeff = svec_get(v, hit);
            v = svec_axpy(v, -*coeff, rows_[row_pos]);
        }
    }

    void add_row(SVec v) {
        v = reduce(v);
        bool main_empty = v.empty() || v.front().first >= main_cols_;
        if (main_empty) {
            if (!v.empty()) nulls_.push_back(std::move(v));
            return;
        }
        int piv = v.front().first;
        v = svec_scale(v, v.front().second.inverse());
        for (auto& row : rows_) {
            const Scalar* c = svec_get(row, piv);
            if (c) row = svec_axpy(row, -*c, v);
        }
        rows_.push_back(std::move(v));
        pivot_row_[piv] = rows_.size() - 1;
    }

    // Rows sorted by pivot column; pivots strictly increasing.
    std::pair<std::vector<SVec>, std::vector<int>> sorted_rows() const {
        std::vector<SVec> out;
        std::vector<int> pivots;
        out.reserve(rows_.size());
        pivots.reserve(rows_.size());
        for (const auto& [piv, pos] : pivot_row_) {
            out.push_back(rows_[pos]);
            pivots.push_back(piv);
        }
        return {std::move(out), std::move(pivots)};
    }

    const std::vector<SVec>& nulls() const { return nulls_; }
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    int main_cols_;
    std::vector<SVec> rows_;
    std::map<int, std::size_t> pivot_row_;
    std::vector<SVec> nulls_;
};

}  // namespace

RrefResult rref(const Matrix& m) {
    Echelon ech(m.cols());
    for (int i = 0; i < m.rows(); ++i) ech.add_row(m.row(i));
    auto [rows, pivots] = ech.sorted_rows();
    RrefResult res;
    res.rank = static_cast<int>(rows.size());
    res.mat = Matrix::from_rows(m.cols(), std::move(rows));
    res.pivots = std::move(pivots);
    return res;
}

Subspace Subspace::from_rows(int ambient, std::vector<SVec> rows) {
    Echelon ech(ambient);
    for (auto& r : rows) ech.add_row(std::move(r));
    auto [basis, pivots] = ech.sorted_rows();
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = std::move(basis);
    s.pivots_ = std::move(pivots);
    return s;
}

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    return s;
}

SVec Subspace::reduce(SVec v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Scalar* c = svec_get(v, pivots_[i]);
        if (c) v = svec_axpy(v, -*c, basis_[i]);
    }
    return v;
}

bool Subspace::contains(const SVec& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) {
        throw ValidationError("subspaces live in different ambient spaces");
    }
    for (const auto& row : other.basis_) {
        if (!contains(row)) return false;
    }
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    if (ambient_ != o.ambient_ || basis_.size() != o.basis_.size()) return false;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (!svec_equal(basis_[i], o.basis_[i])) return false;
    }
    return true;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) {
        throw ValidationError("subspace intersection: ambient dimensions differ");
    }
    int n = a.ambient();
    // Zassenhaus: eliminate [v | v] (rows of a) against [w | 0] (rows of b);
    // rows whose left half vanishes have right half in the intersection.
    Echelon ech(n);
    for (const auto& v : a.basis()) {
        SVec row = v;
        for (const auto& [i, x] : v) row.emplace_back(i + n, x);
        ech.add_row(std::move(row));
    }
    for (const auto& w : b.basis()) ech.add_row(w);
    std::vector<SVec> inter;
    for (const auto& tail : ech.nulls()) inter.push_back(svec_shift(tail, -n));
    return Subspace::from_rows(n, std::move(inter));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) {
        throw ValidationError("subspace sum: ambient dimensions differ");
    }
    std::vector<SVec> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace::from_rows(a.ambient(), std::move(rows));
}

struct SpanSolver::Impl {
    Impl(int main_cols) : ech(main_cols), main_cols(main_cols) {}
    Echelon ech;
    int main_cols;
};

SpanSolver::SpanSolver(const Field& k, std::vector<SVec> vectors)
    : field_(k), count_(static_cast<int>(vectors.size())) {
    int n = 0;
    for (const auto& v : vectors) {
        if (!v.empty()) n = std::max(n, v.back().first + 1);
    }
    impl_ = std::make_unique<Impl>(n);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        SVec row = std::move(vectors[i]);
        row.emplace_back(n + static_cast<int>(i), k.one());
        impl_->ech.add_row(std::move(row));
    }
}

SpanSolver::SpanSolver(SpanSolver&&) noexcept = default;
SpanSolver::~SpanSolver() = default;

std::optional<std::vector<Scalar>> SpanSolver::solve(const SVec& target) const {
    if (!target.empty() && target.back().first >= impl_->main_cols) {
        return std::nullopt;  // support beyond every spanning vector
    }
    // Reduce the target, accumulating the combination in the tracking tail.
    SVec residue = impl_->ech.reduce(target);
    SVec main;
    SVec combo;
    for (const auto& [i, x] : residue) {
        (i < impl_->main_cols ? main : combo).emplace_back(i, x);
    }
    if (!main.empty()) return std::nullopt;
    // The residue is target - sum_j lambda_j [v_j | e_j]; with the main part
    // gone, the negated tail is the coefficient vector.
    std::vector<Scalar> coeffs(count_, field_.zero());
    for (const auto& [i, x] : combo) coeffs[i - impl_->main_cols] = -x;
    return coeffs;
}

std::optional<std::vector<Scalar>> solve_in_span(const Field& k,
                                                 const std::vector<SVec>& vectors,
                                                 const SVec& target) {
    return SpanSolver(k, vectors).solve(target);
}

std::vector<SVec> left_kernel(const Field& k, const std::vector<SVec>& rows, int cols) {
    Echelon ech(cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SVec row = rows[i];
        row.emplace_back(cols + static_cast<int>(i), k.one());
        ech.add_row(std::move(row));
    }
    std::vector<SVec> kernel;
    for (const auto& tail : ech.nulls()) kernel.push_back(svec_shift(tail, -cols));
    Subspace canon = Subspace::from_rows(static_cast<int>(rows.size()), std::move(kernel));
    return canon.basis();
}

}  // namespace koszul
