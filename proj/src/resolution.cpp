#include "koszul/resolution.hpp"

#include <algorithm>

#include "koszul/comult.hpp"

namespace koszul {

const ResolutionLevel& ResolutionData::level(int n) const {
    if (n < 0 || n > top()) {
        throw ValidationError("resolution level " + std::to_string(n) + " not computed");
    }
    return levels[n];
}

namespace {

TensorElement arrow_tensor(const Quiver& q, const Field& k, int a) {
    TensorElement t;
    t.degree = 1;
    t.add_term(Path::of_arrow(q, a), k.one());
    return t;
}

ResolutionLevel level_from_block_rows(
    const Algebra& alg, int n,
    const std::map<std::pair<int, int>, std::vector<SVec>>& blocks) {
    ResolutionLevel level;
    level.degree = n;
    for (const auto& [ends, rows] : blocks) {
        Subspace block = Subspace::from_rows(alg.num_paths(n), rows);
        for (const SVec& basis_row : block.basis()) {
            level.gens.push_back(alg.svec_to_tensor(n, basis_row));
            level.endpoints.push_back(ends);
        }
    }
    return level;
}

}  // namespace

ResolutionData compute_levels(const Algebra& alg, int top) {
    if (top < 2) throw ValidationError("resolution depth must be at least 2");
    if (top > alg.degree_bound()) {
        throw ValidationError("resolution depth exceeds the session degree bound");
    }
    const Quiver& q = alg.quiver();
    const Field& k = alg.field();
    ResolutionData data;

    ResolutionLevel l0;
    l0.degree = 0;
    for (int v = 0; v < q.num_vertices(); ++v) {
        TensorElement t;
        t.degree = 0;
        t.add_term(Path::trivial(v), k.one());
        l0.gens.push_back(std::move(t));
        l0.endpoints.emplace_back(v, v);
    }
    data.levels.push_back(std::move(l0));

    ResolutionLevel l1;
    l1.degree = 1;
    for (int a = 0; a < q.num_arrows(); ++a) {
        l1.gens.push_back(arrow_tensor(q, k, a));
        l1.endpoints.emplace_back(q.arrows[a].src, q.arrows[a].tgt);
    }
    data.levels.push_back(std::move(l1));

    {
        std::map<std::pair<int, int>, std::vector<SVec>> blocks;
        for (const TensorElement& rel : alg.relation_components()) {
            auto ends = *rel.uniform_endpoints(q);
            blocks[ends].push_back(alg.tensor_to_svec(rel));
        }
        data.levels.push_back(level_from_block_rows(alg, 2, blocks));
    }

    for (int n = 3; n <= top; ++n) {
        const ResolutionLevel& prev = data.levels[n - 1];
        const GradedPiece& quad = alg.graded_piece(2);
        // spanning vectors of K^{n-1} (x) V, grouped per vertex-pair block
        std::map<std::pair<int, int>, std::vector<TensorElement>> spanning;
        for (int j = 0; j < prev.count(); ++j) {
            for (int a = 0; a < q.num_arrows(); ++a) {
                if (prev.endpoints[j].second != q.arrows[a].src) continue;
                spanning[{prev.endpoints[j].first, q.arrows[a].tgt}].push_back(
                    tensor_concat(q, prev.gens[j], arrow_tensor(q, k, a)));
            }
        }
        std::map<std::pair<int, int>, std::vector<SVec>> blocks;
        int lambda2_dim = quad.dim();
        for (const auto& [ends, elts] : spanning) {
            // image of each spanning vector under reduction mod R applied to
            // the last two tensor factors
            std::vector<SVec> images;
            images.reserve(elts.size());
            for (const TensorElement& elt : elts) {
                std::map<int, Scalar> acc;
                for (const auto& [path, c] : elt.terms) {
                    Path prefix{path.vertex,
                                std::vector<int>(path.arrows.begin(), path.arrows.end() - 2)};
                    Path tail_path{q.arrows[path.arrows[n - 2]].src,
                                   {path.arrows[n - 2], path.arrows[n - 1]}};
                    SVec tail{{alg.path_index(2, tail_path), c}};
                    int offset = alg.path_index(n - 2, prefix) * lambda2_dim;
                    for (const auto& [pos, x] : quad.project(std::move(tail))) {
                        auto [it, inserted] = acc.emplace(offset + pos, x);
                        if (!inserted) it->second += x;
                    }
                }
                SVec image;
                for (const auto& [idx, x] : acc) {
                    if (!x.is_zero()) image.emplace_back(idx, x);
                }
                images.push_back(std::move(image));
            }
            std::vector<SVec> combos =
                left_kernel(k, images, alg.num_paths(n - 2) * lambda2_dim);
            std::vector<SVec>& rows = blocks[ends];
            for (const SVec& combo : combos) {
                TensorElement sum;
                sum.degree = n;
                for (const auto& [j, c] : combo) sum += elts[j].scaled(c);
                if (!sum.is_zero()) rows.push_back(alg.tensor_to_svec(sum));
            }
            if (rows.empty()) blocks.erase(ends);
        }
        data.levels.push_back(level_from_block_rows(alg, n, blocks));
    }

    data.spans.reserve(data.levels.size());
    for (const ResolutionLevel& level : data.levels) {
        std::vector<SVec> rows;
        rows.reserve(level.count());
        for (const TensorElement& g : level.gens) rows.push_back(alg.tensor_to_svec(g));
        data.spans.push_back(Subspace::from_rows(alg.num_paths(level.degree), std::move(rows)));
    }
    return data;
}

void override_level(const Algebra& alg, ResolutionData& data, int n,
                    std::vector<TensorElement> gens) {
    if (n < 0 || n > data.top()) throw ValidationError("no such resolution level");
    const ResolutionLevel& current = data.levels[n];
    if (static_cast<int>(gens.size()) != current.count()) {
        throw SpanMismatchError("override provides " + std::to_string(gens.size()) +
                                " generators, level has " + std::to_string(current.count()));
    }
    std::vector<std::pair<int, int>> endpoints;
    std::vector<SVec> rows;
    for (const TensorElement& g : gens) {
        if (g.degree != n || g.is_zero()) {
            throw SpanMismatchError("override elements must be nonzero of degree " +
                                    std::to_string(n));
        }
        auto ends = g.uniform_endpoints(alg.quiver());
        if (!ends) throw SpanMismatchError("override elements must be uniform");
        endpoints.push_back(*ends);
        SVec v = alg.tensor_to_svec(g);
        if (!data.spans[n].contains(v)) {
            throw SpanMismatchError("override element lies outside the syzygy space");
        }
        rows.push_back(std::move(v));
    }
    if (Subspace::from_rows(alg.num_paths(n), rows).dim() != current.count()) {
        throw SpanMismatchError("override elements are linearly dependent");
    }
    data.levels[n].gens = std::move(gens);
    data.levels[n].endpoints = std::move(endpoints);
}

namespace {

// Basis bookkeeping for the degree-d part of the free cover at level n:
// one summand per generator i, spanned by the degree d-n normal words
// starting at the generator's target vertex.
struct GradedFibre {
    std::vector<std::pair<int, int>> items;  // (generator, basis position)
    std::map<std::pair<int, int>, int> index;
};

GradedFibre graded_fibre(const Algebra& alg, const ResolutionLevel& level, int d) {
    GradedFibre f;
    int w = d - level.degree;
    if (w < 0) return f;
    const GradedPiece& gp = alg.graded_piece(w);
    for (int i = 0; i < level.count(); ++i) {
        for (int pos = 0; pos < gp.dim(); ++pos) {
            if (gp.block[pos].first != level.endpoints[i].second) continue;
            f.index[{i, pos}] = static_cast<int>(f.items.size());
            f.items.emplace_back(i, pos);
        }
    }
    return f;
}

// Matrix of the induced map from level n to level n-1 in internal degree d.
int differential_rank(const Algebra& alg, const ResolutionData& data, const ComultCache& comult,
                      int n, int d) {
    const ResolutionLevel& from = data.level(n);
    const ResolutionLevel& to = data.level(n - 1);
    GradedFibre source = graded_fibre(alg, from, d);
    GradedFibre target = graded_fibre(alg, to, d);
    if (source.items.empty() || target.items.empty()) return 0;

    const ComultSlice& slice = comult.slice(n, n - 1);
    int w = d - n;
    std::vector<SVec> rows;
    rows.reserve(source.items.size());
    for (const auto& [i, pos] : source.items) {
        AlgebraElement word;
        word.add(w, {{pos, alg.field().one()}});
        std::map<int, Scalar> acc;
        for (const auto& [key, c] : slice.coeffs) {
            const auto& [ii, p, qa] = key;
            if (ii != i) continue;
            // generator p picks up the arrow-times-word coefficient
            AlgebraElement prod =
                alg.multiply(alg.path_element(Path::of_arrow(alg.quiver(), qa)), word);
            auto comp = prod.comps.find(w + 1);
            if (comp == prod.comps.end()) continue;
            for (const auto& [tpos, x] : comp->second) {
                int col = target.index.at({p, tpos});
                auto [it, inserted] = acc.emplace(col, c * x);
                if (!inserted) it->second += x * c;
            }
        }
        SVec row;
        for (const auto& [col, x] : acc) {
            if (!x.is_zero()) row.emplace_back(col, x);
        }
        rows.push_back(std::move(row));
    }
    return Subspace::from_rows(static_cast<int>(target.items.size()), std::move(rows)).dim();
}

}  // namespace

ExactnessReport verify_exactness(const Algebra& alg, const ResolutionData& data,
                                 const ComultCache& comult, int maxn, int maxd) {
    if (maxn + 1 > data.top()) {
        throw ValidationError("exactness check needs one level above maxn");
    }
    ExactnessReport report;
    std::map<std::pair<int, int>, int> rank;
    auto rank_at = [&](int n, int d) {
        auto it = rank.find({n, d});
        if (it == rank.end()) {
            it = rank.emplace(std::pair{n, d}, differential_rank(alg, data, comult, n, d)).first;
        }
        return it->second;
    };

    for (int d = 1; d <= maxd; ++d) {
        // augmentation spot: the degree-d kernel of the cover is the whole
        // degree-d piece, which the image of the next map must fill
        int h = alg.graded_piece(d).dim() - rank_at(1, d);
        report.homology.emplace_back(0, d, h);
        if (h != 0 && report.ok) {
            report.ok = false;
            report.first_failure = {0, d};
        }
    }
    for (int n = 1; n <= maxn; ++n) {
        for (int d = n; d <= maxd; ++d) {
            int dim = static_cast<int>(graded_fibre(alg, data.level(n), d).items.size());
            int h = dim - rank_at(n, d) - rank_at(n + 1, d);
            report.homology.emplace_back(n, d, h);
            if (h != 0 && report.ok) {
                report.ok = false;
                report.first_failure = {n, d};
            }
        }
    }
    return report;
}

}  // namespace koszul
