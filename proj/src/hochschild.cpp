#include "koszul/hochschild.hpp"

#include <algorithm>

namespace koszul {

namespace {

AlgebraElement unit_elt(const Field& k, int degree, int pos) {
    AlgebraElement e;
    e.add(degree, {{pos, k.one()}});
    return e;
}

AlgebraElement arrow_elt(const Context& c, int a) {
    return unit_elt(c.alg.field(), 1, a);  // the degree-one piece is the arrow span
}

// Basis of the degree-n cochain space at one internal degree: pairs of a
// generator index and a compatible normal word position.
struct CochainBasis {
    std::vector<std::pair<int, int>> items;
    std::map<std::pair<int, int>, int> index;
    int size() const { return static_cast<int>(items.size()); }
};

CochainBasis cochain_basis_at(const Context& c, int n, int w) {
    CochainBasis basis;
    if (w < 0) return basis;
    const ResolutionLevel& level = c.res.level(n);
    const GradedPiece& gp = c.alg.graded_piece(w);
    for (int i = 0; i < level.count(); ++i) {
        for (int pos = 0; pos < gp.dim(); ++pos) {
            if (gp.block[pos] != level.endpoints[i]) continue;
            basis.index[{i, pos}] = basis.size();
            basis.items.emplace_back(i, pos);
        }
    }
    return basis;
}

SVec cochain_weight_svec(const Cochain& x, int w, const CochainBasis& basis) {
    SVec out;
    for (int i = 0; i < static_cast<int>(x.values.size()); ++i) {
        auto comp = x.values[i].comps.find(w);
        if (comp == x.values[i].comps.end()) continue;
        for (const auto& [pos, coeff] : comp->second) {
            out.emplace_back(basis.index.at({i, pos}), coeff);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Cochain cochain_from_svec(const Context& c, int n, int w, const CochainBasis& basis,
                          const SVec& v) {
    Cochain out = zero_cochain(c, n);
    for (const auto& [idx, coeff] : v) {
        const auto& [i, pos] = basis.items[idx];
        out.values[i].add(w, {{pos, coeff}});
    }
    return out;
}

// Rows are the images of the basis cochains, in (n+1, w+1) coordinates.
std::vector<SVec> coboundary_matrix(const Context& c, int n, int w,
                                    const CochainBasis& from, const CochainBasis& to) {
    std::vector<SVec> rows;
    rows.reserve(from.size());
    for (const auto& [i, pos] : from.items) {
        Cochain unit = zero_cochain(c, n);
        unit.values[i] = unit_elt(c.alg.field(), w, pos);
        rows.push_back(cochain_weight_svec(coboundary(c, unit), w + 1, to));
    }
    return rows;
}

}  // namespace

bool Cochain::is_zero() const {
    return std::all_of(values.begin(), values.end(),
                       [](const AlgebraElement& v) { return v.is_zero(); });
}

bool Cochain::operator==(const Cochain& o) const {
    return degree == o.degree && values == o.values;
}

Cochain zero_cochain(const Context& c, int degree) {
    Cochain out;
    out.degree = degree;
    out.values.resize(c.res.level(degree).count());
    return out;
}

Cochain cochain_add(const Cochain& a, const Cochain& b) {
    if (a.degree != b.degree || a.values.size() != b.values.size()) {
        throw ValidationError("cochain degrees differ");
    }
    Cochain out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] = ae_add(out.values[i], b.values[i]);
    }
    return out;
}

Cochain cochain_sub(const Cochain& a, const Cochain& b) {
    if (a.degree != b.degree || a.values.size() != b.values.size()) {
        throw ValidationError("cochain degrees differ");
    }
    Cochain out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] = ae_sub(out.values[i], b.values[i]);
    }
    return out;
}

Cochain cochain_scaled(const Cochain& a, const Scalar& s) {
    Cochain out = a;
    for (auto& v : out.values) v = v.scaled(s);
    return out;
}

void validate_cochain(const Context& c, const Cochain& x) {
    const ResolutionLevel& level = c.res.level(x.degree);
    if (static_cast<int>(x.values.size()) != level.count()) {
        throw ValidationError("cochain has " + std::to_string(x.values.size()) +
                              " entries, level has " + std::to_string(level.count()));
    }
    for (int i = 0; i < level.count(); ++i) {
        for (const auto& [w, coords] : x.values[i].comps) {
            const GradedPiece& gp = c.alg.graded_piece(w);
            for (const auto& [pos, coeff] : coords) {
                if (gp.block[pos] != level.endpoints[i]) {
                    throw ValidationError("cochain entry " + std::to_string(i) +
                                          " leaves the generator's vertex block");
                }
            }
        }
    }
}

std::map<int, Cochain> weight_components(const Context& c, const Cochain& x) {
    std::map<int, Cochain> out;
    for (int i = 0; i < static_cast<int>(x.values.size()); ++i) {
        for (const auto& [w, coords] : x.values[i].comps) {
            auto it = out.find(w);
            if (it == out.end()) it = out.emplace(w, zero_cochain(c, x.degree)).first;
            it->second.values[i].add(w, coords);
        }
    }
    return out;
}

Cochain coboundary(const Context& c, const Cochain& x) {
    int n = x.degree;
    if (n + 1 > c.res.top()) {
        throw ValidationError("coboundary needs level " + std::to_string(n + 1));
    }
    Cochain out = zero_cochain(c, n + 1);
    const ComultSlice& left = c.comult.slice(n + 1, 1);
    for (const auto& [key, coeff] : left.coeffs) {
        const auto& [l, p, j] = key;
        if (x.values[j].is_zero()) continue;
        out.values[l] = ae_add(out.values[l],
                               c.alg.multiply(arrow_elt(c, p), x.values[j]).scaled(coeff));
    }
    const ComultSlice& right = c.comult.slice(n + 1, n);
    Scalar sign = (n + 1) % 2 == 0 ? c.alg.field().one() : -c.alg.field().one();
    for (const auto& [key, coeff] : right.coeffs) {
        const auto& [l, j, q] = key;
        if (x.values[j].is_zero()) continue;
        out.values[l] = ae_add(
            out.values[l],
            c.alg.multiply(x.values[j], arrow_elt(c, q)).scaled(coeff * sign));
    }
    return out;
}

HHDims cohomology_dims(const Context& c, int n, int weight) {
    if (n < 0) throw ValidationError("cohomological degree must be nonnegative");
    HHDims dims;
    dims.n = n;
    dims.weight = weight;
    if (weight < 0) return dims;
    CochainBasis here = cochain_basis_at(c, n, weight);
    dims.dim_space = here.size();
    CochainBasis up = cochain_basis_at(c, n + 1, weight + 1);
    std::vector<SVec> out_rows = coboundary_matrix(c, n, weight, here, up);
    int out_rank = Subspace::from_rows(up.size(), std::move(out_rows)).dim();
    dims.dim_ker = dims.dim_space - out_rank;
    if (n >= 1 && weight >= 1) {
        CochainBasis down = cochain_basis_at(c, n - 1, weight - 1);
        std::vector<SVec> in_rows = coboundary_matrix(c, n - 1, weight - 1, down, here);
        dims.dim_im = Subspace::from_rows(here.size(), std::move(in_rows)).dim();
    }
    dims.dim_hh = dims.dim_ker - dims.dim_im;
    return dims;
}

std::vector<HHDims> cohomology_dims_all(const Context& c, int n) {
    FiniteDimResult fin = c.alg.finite_dimensionality();
    if (!fin.finite) {
        throw WeightRequiredError(
            "the algebra is not finite dimensional up to the bound; fix an internal degree");
    }
    std::vector<HHDims> out;
    for (int w = 0; w <= c.alg.degree_bound(); ++w) {
        if (c.alg.graded_piece(w).dim() == 0) break;
        out.push_back(cohomology_dims(c, n, w));
    }
    return out;
}

Cochain cup(const Context& c, const Cochain& eta, const Cochain& theta) {
    int n = eta.degree;
    int m = theta.degree;
    if (n + m > c.res.top()) {
        throw TruncationError("cup product degree " + std::to_string(n + m) +
                              " exceeds the computed levels");
    }
    Cochain out = zero_cochain(c, n + m);
    const ComultSlice& slice = c.comult.slice(n + m, n);
    for (const auto& [key, coeff] : slice.coeffs) {
        const auto& [i, p, q] = key;
        if (eta.values[p].is_zero() || theta.values[q].is_zero()) continue;
        out.values[i] = ae_add(
            out.values[i],
            c.alg.multiply(eta.values[p], theta.values[q]).scaled(coeff));
    }
    return out;
}

bool CohomologyClass::operator==(const CohomologyClass& o) const {
    if (degree != o.degree || coords.size() != o.coords.size()) return false;
    auto it = coords.begin();
    auto jt = o.coords.begin();
    for (; it != coords.end(); ++it, ++jt) {
        if (it->first != jt->first || !svec_equal(it->second, jt->second)) return false;
    }
    return true;
}

CohomologyClass reduce_class(const Context& c, const Cochain& x) {
    validate_cochain(c, x);
    if (!coboundary(c, x).is_zero()) {
        throw NotCocycleError("the cochain is not a cocycle");
    }
    CohomologyClass cls;
    cls.degree = x.degree;
    int n = x.degree;
    for (const auto& [w, part] : weight_components(c, x)) {
        CochainBasis here = cochain_basis_at(c, n, w);
        SVec v = cochain_weight_svec(part, w, here);
        // reduce modulo coboundaries
        Subspace bdry;
        if (n >= 1 && w >= 1) {
            CochainBasis down = cochain_basis_at(c, n - 1, w - 1);
            bdry = Subspace::from_rows(here.size(),
                                       coboundary_matrix(c, n - 1, w - 1, down, here));
            v = bdry.reduce(std::move(v));
        }
        if (v.empty()) continue;
        // coordinates against the canonical quotient basis
        CochainBasis up = cochain_basis_at(c, n + 1, w + 1);
        std::vector<SVec> rows = coboundary_matrix(c, n, w, here, up);
        std::vector<SVec> kernel = left_kernel(c.alg.field(), rows, up.size());
        std::vector<SVec> reduced;
        for (SVec& z : kernel) {
            SVec r = bdry.dim() > 0 ? bdry.reduce(std::move(z)) : std::move(z);
            if (!r.empty()) reduced.push_back(std::move(r));
        }
        Subspace quotient = Subspace::from_rows(here.size(), std::move(reduced));
        auto sol = solve_in_span(c.alg.field(), quotient.basis(), v);
        if (!sol) throw KoszulViolationError("cocycle misses the computed quotient basis");
        SVec coords;
        for (std::size_t t = 0; t < sol->size(); ++t) {
            if (!(*sol)[t].is_zero()) coords.emplace_back(static_cast<int>(t), (*sol)[t]);
        }
        if (!coords.empty()) cls.coords.emplace(w, std::move(coords));
    }
    return cls;
}

std::vector<Cochain> cohomology_basis(const Context& c, int n, int weight) {
    CochainBasis here = cochain_basis_at(c, n, weight);
    CochainBasis up = cochain_basis_at(c, n + 1, weight + 1);
    std::vector<SVec> rows = coboundary_matrix(c, n, weight, here, up);
    std::vector<SVec> kernel = left_kernel(c.alg.field(), rows, up.size());
    Subspace bdry;
    if (n >= 1 && weight >= 1) {
        CochainBasis down = cochain_basis_at(c, n - 1, weight - 1);
        bdry = Subspace::from_rows(here.size(),
                                   coboundary_matrix(c, n - 1, weight - 1, down, here));
    }
    std::vector<SVec> reduced;
    for (SVec& z : kernel) {
        SVec r = bdry.dim() > 0 ? bdry.reduce(std::move(z)) : std::move(z);
        if (!r.empty()) reduced.push_back(std::move(r));
    }
    Subspace quotient = Subspace::from_rows(here.size(), std::move(reduced));
    std::vector<Cochain> out;
    out.reserve(quotient.dim());
    for (const SVec& row : quotient.basis()) {
        out.push_back(cochain_from_svec(c, n, weight, here, row));
    }
    return out;
}

namespace {

// Element of the free bimodule cover at one level: generator index plus a
// pair of normal-word coordinates for the two outer factors.
struct BimodKey {
    int gen;
    int ldeg, lpos;
    int rdeg, rpos;
    auto operator<=>(const BimodKey&) const = default;
};
using BimodElt = std::map<BimodKey, Scalar>;

void bimod_accumulate(BimodElt& acc, int gen, const AlgebraElement& left,
                      const AlgebraElement& right, const Scalar& coeff) {
    for (const auto& [ld, lvec] : left.comps) {
        for (const auto& [lp, lc] : lvec) {
            for (const auto& [rd, rvec] : right.comps) {
                for (const auto& [rp, rc] : rvec) {
                    Scalar v = coeff * lc * rc;
                    if (v.is_zero()) continue;
                    BimodKey key{gen, ld, lp, rd, rp};
                    auto [it, inserted] = acc.emplace(key, v);
                    if (!inserted) {
                        it->second += v;
                        if (it->second.is_zero()) acc.erase(it);
                    }
                }
            }
        }
    }
}

BimodElt apply_differential(const Context& c, const SliceFn& slices, int n,
                            const BimodElt& elt) {
    BimodElt out;
    const ComultSlice& left_slice = slices(n, 1);
    const ComultSlice& right_slice = slices(n, n - 1);
    Scalar sign = n % 2 == 0 ? c.alg.field().one() : -c.alg.field().one();
    for (const auto& [key, coeff] : elt) {
        AlgebraElement left = unit_elt(c.alg.field(), key.ldeg, key.lpos);
        AlgebraElement right = unit_elt(c.alg.field(), key.rdeg, key.rpos);
        for (const auto& [skey, sc] : left_slice.coeffs) {
            const auto& [j, p, j2] = skey;
            if (j != key.gen) continue;
            bimod_accumulate(out, j2, c.alg.multiply(left, arrow_elt(c, p)), right,
                             coeff * sc);
        }
        for (const auto& [skey, sc] : right_slice.coeffs) {
            const auto& [j, j2, q] = skey;
            if (j != key.gen) continue;
            bimod_accumulate(out, j2, left, c.alg.multiply(arrow_elt(c, q), right),
                             coeff * sc * sign);
        }
    }
    return out;
}

}  // namespace

bool verify_complex_with(const Context& c, int top, const SliceFn& slices,
                         std::string* witness) {
    for (int n = 2; n <= top; ++n) {
        const ResolutionLevel& level = c.res.level(n);
        for (int i = 0; i < level.count(); ++i) {
            BimodElt start;
            int o = level.endpoints[i].first;
            int t = level.endpoints[i].second;
            start.emplace(BimodKey{i, 0, o, 0, t}, c.alg.field().one());
            BimodElt once = apply_differential(c, slices, n, start);
            BimodElt twice = apply_differential(c, slices, n - 1, once);
            if (!twice.empty()) {
                if (witness) {
                    *witness = "generator " + std::to_string(i) + " at level " +
                               std::to_string(n);
                }
                return false;
            }
        }
    }
    return true;
}

bool verify_complex(const Context& c, int top, std::string* witness) {
    return verify_complex_with(
        c, top, [&](int n, int r) -> const ComultSlice& { return c.comult.slice(n, r); },
        witness);
}

}  // namespace koszul
