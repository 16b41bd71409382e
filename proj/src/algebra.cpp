#include "koszul/algebra.hpp"

#include <algorithm>

namespace koszul {

SVec GradedPiece::project(SVec v) const {
    if (full) return {};
    v = rel.reduce(std::move(v));
    SVec out;
    out.reserve(v.size());
    for (const auto& [i, c] : v) {
        auto it = normal_pos.find(i);
        // reduction against the RREF leaves support on non-pivot columns only
        out.emplace_back(it->second, c);
    }
    return out;
}

void AlgebraElement::add(int degree, const SVec& v) {
    if (v.empty()) return;
    auto it = comps.find(degree);
    if (it == comps.end()) {
        comps.emplace(degree, v);
        return;
    }
    it->second = svec_add(it->second, v);
    if (it->second.empty()) comps.erase(it);
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement out;
    if (c.is_zero()) return out;
    for (const auto& [d, v] : comps) out.comps.emplace(d, svec_scale(v, c));
    return out;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (comps.size() != o.comps.size()) return false;
    auto it = comps.begin();
    auto jt = o.comps.begin();
    for (; it != comps.end(); ++it, ++jt) {
        if (it->first != jt->first || !svec_equal(it->second, jt->second)) return false;
    }
    return true;
}

AlgebraElement ae_add(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out = a;
    for (const auto& [d, v] : b.comps) out.add(d, v);
    return out;
}

AlgebraElement ae_sub(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out = a;
    for (const auto& [d, v] : b.comps) out.add(d, svec_neg(v));
    return out;
}

Algebra::Algebra(Presentation pres, std::optional<int> maxdeg_override, int size_guard)
    : pres_(std::move(pres)), maxdeg_(maxdeg_override.value_or(pres_.maxdeg)) {
    if (maxdeg_ < 2) throw ValidationError("maxdeg must be at least 2");
    for (const auto& rel : pres_.relations) {
        if (rel.degree != 2 || rel.is_zero()) {
            throw ValidationError("relations must be nonzero of degree 2");
        }
        for (auto& piece : uniform_components(pres_.quiver, rel)) {
            rel_components_.push_back(std::move(piece));
        }
    }
    check_size_guard(size_guard);
}

void Algebra::check_size_guard(int size_guard) const {
    const Quiver& q = pres_.quiver;
    int nv = q.num_vertices();
    // per-block path counts, clamped to avoid overflow
    const std::uint64_t cap = static_cast<std::uint64_t>(size_guard) + 1;
    std::vector<std::uint64_t> count(nv * nv, 0);
    for (int u = 0; u < nv; ++u) count[u * nv + u] = 1;
    for (int n = 1; n <= degree_bound(); ++n) {
        std::vector<std::uint64_t> next(nv * nv, 0);
        for (const auto& a : q.arrows) {
            for (int v = 0; v < nv; ++v) {
                next[a.src * nv + v] =
                    std::min(cap, next[a.src * nv + v] + count[a.tgt * nv + v]);
            }
        }
        for (int u = 0; u < nv; ++u) {
            for (int v = 0; v < nv; ++v) {
                if (next[u * nv + v] > static_cast<std::uint64_t>(size_guard)) {
                    throw ValidationError(
                        "tensor block at degree " + std::to_string(n) + " exceeds the size guard (" +
                        std::to_string(size_guard) + " columns); lower maxdeg or raise the guard");
                }
            }
        }
        count = std::move(next);
    }
}

const std::vector<Path>& Algebra::paths(int n) const {
    if (n < 0 || n > degree_bound()) {
        throw ValidationError("degree " + std::to_string(n) + " outside the session bound");
    }
    std::lock_guard<std::mutex> lock(paths_mutex_);
    for (int e = static_cast<int>(paths_.size()); e <= n; ++e) {
        paths_.push_back(std::make_unique<std::vector<Path>>(build_paths(e)));
    }
    return *paths_[n];
}

std::vector<Path> Algebra::build_paths(int n) const {
    const Quiver& q = pres_.quiver;
    std::vector<Path> out;
    if (n == 0) {
        for (int v = 0; v < q.num_vertices(); ++v) out.push_back(Path::trivial(v));
        return out;
    }
    // first arrow is the major sort key, so prepend to shorter paths
    const std::vector<Path>& shorter = *paths_[n - 1];
    for (int a = 0; a < q.num_arrows(); ++a) {
        for (const Path& p : shorter) {
            if (p.source() != q.arrows[a].tgt) continue;
            Path ext = Path::of_arrow(q, a);
            ext.arrows.insert(ext.arrows.end(), p.arrows.begin(), p.arrows.end());
            out.push_back(std::move(ext));
        }
    }
    return out;
}

int Algebra::path_index(int n, const Path& p) const {
    const auto& all = paths(n);
    auto it = std::lower_bound(all.begin(), all.end(), p);
    if (it == all.end() || !(*it == p)) throw ValidationError("path not in basis");
    return static_cast<int>(it - all.begin());
}

std::vector<Path> Algebra::path_basis(int n, int u, int v) const {
    std::vector<Path> out;
    for (const Path& p : paths(n)) {
        if (p.source() == u && p.target(pres_.quiver) == v) out.push_back(p);
    }
    return out;
}

const GradedPiece& Algebra::graded_piece(int d) const {
    if (d < 0 || d > degree_bound()) {
        throw ValidationError("degree " + std::to_string(d) + " outside the session bound");
    }
    std::lock_guard<std::mutex> lock(gp_mutex_);
    for (int e = static_cast<int>(gp_.size()); e <= d; ++e) {
        gp_.push_back(std::make_unique<GradedPiece>(build_graded_piece(e)));
    }
    return *gp_[d];
}

GradedPiece Algebra::build_graded_piece(int d) const {
    GradedPiece gp;
    gp.degree = d;
    const Quiver& q = pres_.quiver;
    int n_paths = num_paths(d);

    auto finish_normals = [&](const std::vector<int>& pivots) {
        std::size_t pi = 0;
        for (int i = 0; i < n_paths; ++i) {
            if (pi < pivots.size() && pivots[pi] == i) {
                ++pi;
                continue;
            }
            gp.normal_pos[i] = static_cast<int>(gp.normal.size());
            gp.normal.push_back(i);
            const Path& p = paths(d)[i];
            gp.block.emplace_back(p.source(), p.target(q));
        }
    };

    if (d < 2) {
        gp.rel = Subspace::zero(n_paths);
        finish_normals({});
        return gp;
    }
    // zero propagates: once some piece vanishes, all higher ones do
    if (gp_[d - 1]->dim() == 0) {
        gp.full = true;
        return gp;
    }

    std::vector<SVec> rows;
    for (int i = 0; i + 2 <= d; ++i) {
        const auto& prefixes = paths(i);
        const auto& suffixes = paths(d - 2 - i);
        for (const Path& pre : prefixes) {
            for (const TensorElement& rel : rel_components_) {
                auto ends = rel.uniform_endpoints(q);
                if (pre.target(q) != ends->first) continue;
                for (const Path& suf : suffixes) {
                    if (suf.source() != ends->second) continue;
                    SVec row;
                    for (const auto& [mid, c] : rel.terms) {
                        Path w = pre;
                        w.arrows.insert(w.arrows.end(), mid.arrows.begin(), mid.arrows.end());
                        w.arrows.insert(w.arrows.end(), suf.arrows.begin(), suf.arrows.end());
                        row.emplace_back(path_index(d, w), c);
                    }
                    std::sort(row.begin(), row.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    gp.rel = Subspace::from_rows(n_paths, std::move(rows));
    finish_normals(gp.rel.pivots());
    return gp;
}

SVec Algebra::tensor_to_svec(const TensorElement& t) const {
    SVec out;
    out.reserve(t.terms.size());
    for (const auto& [p, c] : t.terms) {
        out.emplace_back(path_index(t.degree, p), c);
    }
    return out;  // map order matches index order
}

TensorElement Algebra::svec_to_tensor(int degree, const SVec& v) const {
    TensorElement t;
    t.degree = degree;
    for (const auto& [i, c] : v) t.terms.emplace(paths(degree)[i], c);
    return t;
}

AlgebraElement Algebra::unit() const {
    AlgebraElement e;
    SVec v;
    const GradedPiece& gp0 = graded_piece(0);
    for (int i = 0; i < gp0.dim(); ++i) v.emplace_back(i, field().one());
    e.add(0, v);
    return e;
}

AlgebraElement Algebra::reduce(const TensorElement& t) const {
    AlgebraElement out;
    if (t.degree > degree_bound()) {
        throw TruncationError("element degree " + std::to_string(t.degree) +
                              " exceeds the truncation bound");
    }
    out.add(t.degree, graded_piece(t.degree).project(tensor_to_svec(t)));
    return out;
}

AlgebraElement Algebra::path_element(const Path& p) const {
    TensorElement t;
    t.degree = p.degree();
    t.add_term(p, field().one());
    return reduce(t);
}

AlgebraElement Algebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement out;
    const Quiver& q = pres_.quiver;
    for (const auto& [d1, v1] : a.comps) {
        const GradedPiece& gp1 = graded_piece(d1);
        for (const auto& [d2, v2] : b.comps) {
            int d = d1 + d2;
            if (d > degree_bound()) {
                throw TruncationError("product degree " + std::to_string(d) +
                                      " exceeds the truncation bound " +
                                      std::to_string(degree_bound()));
            }
            const GradedPiece& gp2 = graded_piece(d2);
            std::map<int, Scalar> raw;
            for (const auto& [i1, c1] : v1) {
                const Path& p1 = paths(d1)[gp1.normal[i1]];
                for (const auto& [i2, c2] : v2) {
                    const Path& p2 = paths(d2)[gp2.normal[i2]];
                    if (!paths_composable(q, p1, p2)) continue;
                    Path w = path_concat(q, p1, p2);
                    Scalar c = c1 * c2;
                    auto [it, inserted] = raw.emplace(path_index(d, w), c);
                    if (!inserted) it->second += c;
                }
            }
            SVec flat;
            for (const auto& [i, c] : raw) {
                if (!c.is_zero()) flat.emplace_back(i, c);
            }
            out.add(d, graded_piece(d).project(std::move(flat)));
        }
    }
    return out;
}

FiniteDimResult Algebra::finite_dimensionality() const {
    FiniteDimResult res;
    res.bound = degree_bound();
    int total = 0;
    for (int d = 0; d <= degree_bound(); ++d) {
        int dim = graded_piece(d).dim();
        if (dim == 0) {
            res.finite = true;
            res.total = total;
            return res;
        }
        total += dim;
    }
    return res;
}

}  // namespace koszul
