#pragma once

#include <optional>
#include <tuple>

#include "koszul/algebra.hpp"

namespace koszul {

/// One syzygy level: the ordered uniform generators of the n-th space in the
/// filtration, together with their (source, target) vertices.
struct ResolutionLevel {
    int degree = 0;
    std::vector<TensorElement> gens;
    std::vector<std::pair<int, int>> endpoints;

    /// Number of generators (one more than the top generator index).
    int count() const { return static_cast<int>(gens.size()); }
};

struct ResolutionData {
    std::vector<ResolutionLevel> levels;
    std::vector<Subspace> spans;  // span of each level inside its tensor power

    int top() const { return static_cast<int>(levels.size()) - 1; }
    const ResolutionLevel& level(int n) const;
};

/// Computes syzygy levels 0..top. Level 0 holds the vertices, level 1 the
/// arrows, level 2 the canonical echelon basis of the relation bimodule; for
/// n >= 3 the level is (K^{n-1} (x) V) intersected with (V^{n-2} (x) R),
/// realized as the kernel of reduction mod R on the last two tensor factors
/// and echelonized per vertex-pair block.
ResolutionData compute_levels(const Algebra& alg, int top);

/// Replaces the basis of one level after validating that the new elements
/// are uniform of the right degree, independent, and span the level exactly.
void override_level(const Algebra& alg, ResolutionData& data, int n,
                    std::vector<TensorElement> gens);

class ComultCache;

struct ExactnessReport {
    bool ok = true;
    /// (homological degree n, internal degree d, homology dimension)
    std::vector<std::tuple<int, int, int>> homology;
    std::optional<std::pair<int, int>> first_failure;
};

/// Rank bookkeeping for the graded complex induced by the levels: homology
/// must vanish at every checked spot away from the augmentation. A failure
/// means the algebra is not Koszul (or the bound is too small to decide).
ExactnessReport verify_exactness(const Algebra& alg, const ResolutionData& data,
                                 const ComultCache& comult, int maxn, int maxd);

}  // namespace koszul
