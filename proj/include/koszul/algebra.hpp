#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "koszul/presentation.hpp"

namespace koszul {

/// Normal-form data for one graded piece of the quotient algebra: the span
/// of the degree-d image of the relation ideal inside the d-th tensor power,
/// plus the surviving (non-pivot) paths that form the canonical basis.
struct GradedPiece {
    int degree = 0;
    bool full = false;  // the relation image is everything; the piece is zero
    Subspace rel;
    std::vector<int> normal;                    // path indices of basis elements
    std::vector<std::pair<int, int>> block;     // (source, target) per basis element
    std::map<int, int> normal_pos;              // path index -> basis position

    int dim() const { return static_cast<int>(normal.size()); }
    /// Tensor-power coordinates -> normal-form coordinates.
    SVec project(SVec v) const;
};

/// Element of the quotient algebra, stored per degree in the normal bases.
struct AlgebraElement {
    std::map<int, SVec> comps;

    bool is_zero() const { return comps.empty(); }
    void add(int degree, const SVec& v);
    AlgebraElement scaled(const Scalar& c) const;
    bool operator==(const AlgebraElement& o) const;
};

AlgebraElement ae_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement ae_sub(const AlgebraElement& a, const AlgebraElement& b);

struct FiniteDimResult {
    bool finite = false;
    int total = 0;  // total dimension when finite
    int bound = 0;  // degree bound that was inspected
};

/// A computation session over one presentation: cached path bases, graded
/// pieces and normal-form multiplication. Everything is computed exactly
/// once per degree and is immutable afterwards; the caches may be hit from
/// several threads.
class Algebra {
public:
    explicit Algebra(Presentation pres, std::optional<int> maxdeg_override = std::nullopt,
                     int size_guard = 20000);

    const Presentation& pres() const { return pres_; }
    const Quiver& quiver() const { return pres_.quiver; }
    const Field& field() const { return pres_.field; }

    /// Highest degree reported to callers.
    int maxdeg() const { return maxdeg_; }
    /// Highest tensor degree materialized internally (maxdeg + 1, so that
    /// differentials out of the top reported degree exist).
    int degree_bound() const { return maxdeg_ + 1; }

    /// All composable arrow sequences of length n in the canonical order.
    const std::vector<Path>& paths(int n) const;
    int num_paths(int n) const { return static_cast<int>(paths(n).size()); }
    int path_index(int n, const Path& p) const;
    /// Paths of length n from u to v (the (u, v) block of the tensor power).
    std::vector<Path> path_basis(int n, int u, int v) const;

    const GradedPiece& graded_piece(int d) const;

    /// Uniform pieces of the declared relations: the degree-2 generators of
    /// the relation bimodule, blocked by vertex pair.
    const std::vector<TensorElement>& relation_components() const {
        return rel_components_;
    }

    SVec tensor_to_svec(const TensorElement& t) const;
    TensorElement svec_to_tensor(int degree, const SVec& v) const;

    AlgebraElement zero() const { return {}; }
    AlgebraElement unit() const;
    /// Normal form of a tensor element (single homogeneous component).
    AlgebraElement reduce(const TensorElement& t) const;
    AlgebraElement path_element(const Path& p) const;
    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

    FiniteDimResult finite_dimensionality() const;

private:
    std::vector<Path> build_paths(int n) const;
    GradedPiece build_graded_piece(int d) const;
    void check_size_guard(int size_guard) const;

    Presentation pres_;
    int maxdeg_;
    std::vector<TensorElement> rel_components_;

    mutable std::mutex paths_mutex_;
    mutable std::vector<std::unique_ptr<std::vector<Path>>> paths_;
    mutable std::mutex gp_mutex_;
    mutable std::vector<std::unique_ptr<GradedPiece>> gp_;
};

}  // namespace koszul
