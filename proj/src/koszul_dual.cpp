#include "koszul/koszul_dual.hpp"

#include <algorithm>

namespace koszul {

ExtElement ext_basis(const Context& c, int n, int i) {
    const ResolutionLevel& level = c.res.level(n);
    if (i < 0 || i >= level.count()) throw ValidationError("no such generator");
    return ExtElement{n, {{i, c.alg.field().one()}}};
}

ExtElement ext_add(const ExtElement& a, const ExtElement& b) {
    if (a.degree != b.degree) throw ValidationError("dual elements of different degree");
    return ExtElement{a.degree, svec_add(a.coords, b.coords)};
}

ExtElement ext_scaled(const ExtElement& a, const Scalar& s) {
    return ExtElement{a.degree, svec_scale(a.coords, s)};
}

ExtElement dual_product(const Context& c, const ExtElement& a, const ExtElement& b) {
    int m = a.degree;
    int n = b.degree;
    if (m + n > c.res.top()) {
        throw TruncationError("dual product degree " + std::to_string(m + n) +
                              " exceeds the computed levels");
    }
    ExtElement out;
    out.degree = m + n;
    if (a.is_zero() || b.is_zero() || c.res.level(m + n).count() == 0) return out;
    // the left factor's index sits in the second slot of the slice at split n
    const ComultSlice& slice = c.comult.slice(m + n, n);
    std::map<int, Scalar> acc;
    for (const auto& [key, coeff] : slice.coeffs) {
        const auto& [l, p, q] = key;
        const Scalar* bp = svec_get(b.coords, p);
        if (!bp) continue;
        const Scalar* aq = svec_get(a.coords, q);
        if (!aq) continue;
        Scalar v = coeff * *aq * *bp;
        auto [it, inserted] = acc.emplace(l, v);
        if (!inserted) it->second += v;
    }
    for (const auto& [l, v] : acc) {
        if (!v.is_zero()) out.coords.emplace_back(l, v);
    }
    return out;
}

std::vector<ExtElement> graded_centre(const Context& c, int n) {
    const ResolutionLevel& level = c.res.level(n);
    if (n + 1 > c.res.top()) {
        throw ValidationError("graded centre at degree " + std::to_string(n) +
                              " needs one level above");
    }
    // coordinates supported on loop generators only
    std::vector<int> vars;
    for (int i = 0; i < level.count(); ++i) {
        if (level.endpoints[i].first == level.endpoints[i].second) vars.push_back(i);
    }
    std::vector<int> var_pos(level.count(), -1);
    for (std::size_t t = 0; t < vars.size(); ++t) var_pos[vars[t]] = static_cast<int>(t);

    int num_arrows = c.alg.quiver().num_arrows();
    int next_count = c.res.level(n + 1).count();
    Scalar sign = n % 2 == 0 ? c.alg.field().one() : -c.alg.field().one();

    // equations indexed by (next-level generator, arrow)
    std::vector<std::map<int, Scalar>> eqs(vars.size());
    const ComultSlice& high = c.comult.slice(n + 1, n);
    for (const auto& [key, coeff] : high.coeffs) {
        const auto& [l, i, j] = key;
        if (var_pos[i] < 0) continue;
        int col = l * num_arrows + j;
        auto [it, inserted] = eqs[var_pos[i]].emplace(col, coeff);
        if (!inserted) it->second += coeff;
    }
    const ComultSlice& low = c.comult.slice(n + 1, 1);
    for (const auto& [key, coeff] : low.coeffs) {
        const auto& [l, j, i] = key;
        if (var_pos[i] < 0) continue;
        int col = l * num_arrows + j;
        Scalar v = -(sign * coeff);
        auto [it, inserted] = eqs[var_pos[i]].emplace(col, v);
        if (!inserted) it->second += v;
    }
    std::vector<SVec> rows(vars.size());
    for (std::size_t t = 0; t < vars.size(); ++t) {
        for (const auto& [col, v] : eqs[t]) {
            if (!v.is_zero()) rows[t].emplace_back(col, v);
        }
    }
    std::vector<SVec> kernel =
        left_kernel(c.alg.field(), rows, next_count * num_arrows);
    std::vector<ExtElement> out;
    out.reserve(kernel.size());
    for (const SVec& combo : kernel) {
        ExtElement z;
        z.degree = n;
        for (const auto& [t, coeff] : combo) z.coords.emplace_back(vars[t], coeff);
        out.push_back(std::move(z));
    }
    return out;
}

ExtElement ext_image(const Context& c, const Cochain& x) {
    const ResolutionLevel& level = c.res.level(x.degree);
    ExtElement out;
    out.degree = x.degree;
    for (int i = 0; i < level.count(); ++i) {
        auto comp = x.values[i].comps.find(0);
        if (comp == x.values[i].comps.end()) continue;
        // degree-zero normal words are the vertices, indexed by themselves
        const Scalar* coeff = svec_get(comp->second, level.endpoints[i].second);
        if (coeff && !coeff->is_zero()) out.coords.emplace_back(i, *coeff);
    }
    return out;
}

bool verify_image_matches_centre(const Context& c, int n, std::string* witness) {
    const ResolutionLevel& level = c.res.level(n);
    const ResolutionLevel& next = c.res.level(n + 1);
    std::vector<int> vars;
    for (int i = 0; i < level.count(); ++i) {
        if (level.endpoints[i].first == level.endpoints[i].second) vars.push_back(i);
    }
    // cocycle condition on scalar-valued cochains, one row per candidate
    int cols = 0;
    std::map<std::pair<int, int>, int> col_of;
    std::vector<SVec> rows;
    for (int var : vars) {
        Cochain unit = zero_cochain(c, n);
        AlgebraElement vertex;
        vertex.add(0, {{level.endpoints[var].first, c.alg.field().one()}});
        unit.values[var] = vertex;
        Cochain image = coboundary(c, unit);
        SVec row;
        for (int l = 0; l < next.count(); ++l) {
            auto comp = image.values[l].comps.find(1);
            if (comp == image.values[l].comps.end()) continue;
            for (const auto& [pos, coeff] : comp->second) {
                auto [it, inserted] = col_of.emplace(std::pair{l, pos}, cols);
                if (inserted) ++cols;
                row.emplace_back(it->second, coeff);
            }
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
    }
    std::vector<SVec> kernel = left_kernel(c.alg.field(), rows, cols);
    std::vector<SVec> image_rows;
    for (const SVec& combo : kernel) {
        SVec full;
        for (const auto& [t, coeff] : combo) full.emplace_back(vars[t], coeff);
        image_rows.push_back(std::move(full));
    }
    Subspace image = Subspace::from_rows(level.count(), std::move(image_rows));

    std::vector<SVec> centre_rows;
    for (const ExtElement& z : graded_centre(c, n)) centre_rows.push_back(z.coords);
    Subspace centre = Subspace::from_rows(level.count(), std::move(centre_rows));
    if (image == centre) return true;
    if (witness) {
        *witness = "degree " + std::to_string(n) + ": image dimension " +
                   std::to_string(image.dim()) + ", centre dimension " +
                   std::to_string(centre.dim());
    }
    return false;
}

bool verify_lifting_identity(const Context& c, int n, int r, std::string* witness) {
    if (n + r + 1 > c.res.top()) {
        throw ValidationError("lifting identity needs level " + std::to_string(n + r + 1));
    }
    const ComultSlice& top_split = c.comult.slice(n + r + 1, n + r);
    const ComultSlice& mid_split = c.comult.slice(n + r, n);
    const ComultSlice& left_split = c.comult.slice(n + r + 1, n);
    const ComultSlice& inner_split = c.comult.slice(r + 1, r);

    // group the inner factors by their expanded generator
    std::map<int, std::vector<std::tuple<int, int, Scalar>>> mid_by_gen;
    for (const auto& [key, coeff] : mid_split.coeffs) {
        const auto& [p, j, y] = key;
        mid_by_gen[p].emplace_back(j, y, coeff);
    }
    std::map<int, std::vector<std::tuple<int, int, Scalar>>> inner_by_gen;
    for (const auto& [key, coeff] : inner_split.coeffs) {
        const auto& [v, y, q] = key;
        inner_by_gen[v].emplace_back(y, q, coeff);
    }

    std::map<std::tuple<int, int, int, int>, Scalar> lhs;
    for (const auto& [key, c2] : top_split.coeffs) {
        const auto& [l, p, q] = key;
        auto it = mid_by_gen.find(p);
        if (it == mid_by_gen.end()) continue;
        for (const auto& [j, y, c1] : it->second) {
            Scalar v = c1 * c2;
            auto [slot, inserted] = lhs.emplace(std::tuple{j, y, q, l}, v);
            if (!inserted) slot->second += v;
        }
    }
    std::map<std::tuple<int, int, int, int>, Scalar> rhs;
    for (const auto& [key, c3] : left_split.coeffs) {
        const auto& [l, j, v] = key;
        auto it = inner_by_gen.find(v);
        if (it == inner_by_gen.end()) continue;
        for (const auto& [y, q, c4] : it->second) {
            Scalar value = c3 * c4;
            auto [slot, inserted] = rhs.emplace(std::tuple{j, y, q, l}, value);
            if (!inserted) slot->second += value;
        }
    }
    auto strip = [](std::map<std::tuple<int, int, int, int>, Scalar>& m) {
        for (auto it = m.begin(); it != m.end();) {
            it = it->second.is_zero() ? m.erase(it) : std::next(it);
        }
    };
    strip(lhs);
    strip(rhs);
    if (lhs == rhs) return true;
    if (witness) {
        *witness = "(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
    }
    return false;
}

bool verify_dual_associativity(const Context& c, int total_degree, std::string* witness) {
    int bound = std::min(total_degree, c.res.top());
    for (int m = 0; m <= bound; ++m) {
        for (int n = 0; m + n <= bound; ++n) {
            for (int l = 0; m + n + l <= bound; ++l) {
                const ResolutionLevel& lm = c.res.level(m);
                const ResolutionLevel& ln = c.res.level(n);
                const ResolutionLevel& ll = c.res.level(l);
                for (int i = 0; i < lm.count(); ++i) {
                    ExtElement a = ext_basis(c, m, i);
                    for (int j = 0; j < ln.count(); ++j) {
                        ExtElement b = ext_basis(c, n, j);
                        ExtElement ab = dual_product(c, a, b);
                        for (int t = 0; t < ll.count(); ++t) {
                            ExtElement d = ext_basis(c, l, t);
                            ExtElement lhs = dual_product(c, ab, d);
                            ExtElement rhs = dual_product(c, a, dual_product(c, b, d));
                            if (!(lhs == rhs)) {
                                if (witness) {
                                    *witness = "triple (" + std::to_string(m) + "," +
                                               std::to_string(n) + "," + std::to_string(l) +
                                               ") indices (" + std::to_string(i) + "," +
                                               std::to_string(j) + "," + std::to_string(t) + ")";
                                }
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    return true;
}

bool verify_centre_commutation(const Context& c, int n, std::string* witness) {
    std::vector<ExtElement> centre = graded_centre(c, n);
    for (int m = 0; n + m <= c.res.top(); ++m) {
        const ResolutionLevel& lm = c.res.level(m);
        Scalar sign = (n * m) % 2 == 0 ? c.alg.field().one() : -c.alg.field().one();
        for (const ExtElement& z : centre) {
            for (int j = 0; j < lm.count(); ++j) {
                ExtElement y = ext_basis(c, m, j);
                ExtElement zy = dual_product(c, z, y);
                ExtElement yz = ext_scaled(dual_product(c, y, z), sign);
                if (!(zy == yz)) {
                    if (witness) {
                        *witness = "degree-" + std::to_string(n) + " centre element against " +
                                   "basis element " + std::to_string(j) + " of degree " +
                                   std::to_string(m);
                    }
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace koszul
