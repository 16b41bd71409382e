#include "koszul/comult.hpp"

#include <algorithm>

namespace koszul {

const Scalar* ComultSlice::find(int i, int p, int q) const {
    auto it = coeffs.find({i, p, q});
    return it == coeffs.end() ? nullptr : &it->second;
}

ComultCache::ComultCache(const Algebra& alg, const ResolutionData& data)
    : alg_(alg), data_(data) {}

const ComultSlice& ComultCache::slice(int n, int r) const {
    if (r < 0 || r > n) throw ValidationError("slice needs 0 <= r <= n");
    if (n > data_.top()) throw ValidationError("slice degree exceeds the computed levels");
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = slices_.find({n, r});
    if (it == slices_.end()) {
        it = slices_.emplace(std::pair{n, r},
                             std::make_unique<ComultSlice>(compute_slice(n, r))).first;
    }
    return *it->second;
}

ComultSlice ComultCache::compute_slice(int n, int r) const {
    ComultSlice slice;
    slice.n = n;
    slice.r = r;
    const Quiver& q = alg_.quiver();
    const ResolutionLevel& left = data_.level(r);
    const ResolutionLevel& right = data_.level(n - r);
    const ResolutionLevel& whole = data_.level(n);

    // one solve context per vertex-pair block of the level-n space
    std::map<std::pair<int, int>, std::vector<int>> targets_by_block;
    for (int i = 0; i < whole.count(); ++i) {
        targets_by_block[whole.endpoints[i]].push_back(i);
    }
    for (const auto& [ends, targets] : targets_by_block) {
        std::vector<std::pair<int, int>> product_ids;
        std::vector<SVec> products;
        for (int p = 0; p < left.count(); ++p) {
            if (left.endpoints[p].first != ends.first) continue;
            for (int qi = 0; qi < right.count(); ++qi) {
                if (right.endpoints[qi].second != ends.second) continue;
                if (left.endpoints[p].second != right.endpoints[qi].first) continue;
                products.push_back(
                    alg_.tensor_to_svec(tensor_concat(q, left.gens[p], right.gens[qi])));
                product_ids.emplace_back(p, qi);
            }
        }
        SpanSolver solver(alg_.field(), products);
        for (int i : targets) {
            auto sol = solver.solve(alg_.tensor_to_svec(whole.gens[i]));
            if (!sol) {
                throw KoszulViolationError(
                    "level-" + std::to_string(n) + " generator " + std::to_string(i) +
                    " is not a combination of level " + std::to_string(r) + " times level " +
                    std::to_string(n - r) + " products");
            }
            for (std::size_t t = 0; t < sol->size(); ++t) {
                if ((*sol)[t].is_zero()) continue;
                slice.coeffs.emplace(
                    std::tuple{i, product_ids[t].first, product_ids[t].second}, (*sol)[t]);
            }
        }
    }
    return slice;
}

bool ComultCache::verify_reconstruction(int n, int r, std::string* witness) const {
    const ComultSlice& s = slice(n, r);
    const ResolutionLevel& left = data_.level(r);
    const ResolutionLevel& right = data_.level(n - r);
    const ResolutionLevel& whole = data_.level(n);
    for (int i = 0; i < whole.count(); ++i) {
        TensorElement sum;
        sum.degree = n;
        for (const auto& [key, c] : s.coeffs) {
            const auto& [ii, p, q] = key;
            if (ii != i) continue;
            sum += tensor_concat(alg_.quiver(), left.gens[p], right.gens[q]).scaled(c);
        }
        if (!(sum == whole.gens[i])) {
            if (witness) {
                *witness = "generator " + std::to_string(i) + " at (n=" + std::to_string(n) +
                           ", r=" + std::to_string(r) + ")";
            }
            return false;
        }
    }
    return true;
}

bool ComultCache::verify_coassociativity(int n, int r, int s, std::string* witness) const {
    if (r < 0 || s < 0 || r + s > n) throw ValidationError("coassociativity needs r+s <= n");
    const ComultSlice& split_r = slice(n, r);
    const ComultSlice& split_s = slice(n - r, s);
    const ComultSlice& split_rs = slice(n, r + s);
    const ComultSlice& inner = slice(r + s, r);

    // group the refining slices by the generator they expand
    std::map<int, std::vector<std::tuple<int, int, Scalar>>> split_s_by_gen;
    for (const auto& [key, c2] : split_s.coeffs) {
        const auto& [qq, u, v] = key;
        split_s_by_gen[qq].emplace_back(u, v, c2);
    }
    std::map<int, std::vector<std::tuple<int, int, Scalar>>> inner_by_gen;
    for (const auto& [key, c2] : inner.coeffs) {
        const auto& [aa, p, u] = key;
        inner_by_gen[aa].emplace_back(p, u, c2);
    }

    // both sides as sparse maps over (i, p, u, v)
    std::map<std::tuple<int, int, int, int>, Scalar> lhs;
    for (const auto& [key1, c1] : split_r.coeffs) {
        const auto& [i, p, q] = key1;
        auto it2 = split_s_by_gen.find(q);
        if (it2 == split_s_by_gen.end()) continue;
        for (const auto& [u, v, c2] : it2->second) {
            Scalar prod = c1 * c2;
            auto [it, inserted] = lhs.emplace(std::tuple{i, p, u, v}, prod);
            if (!inserted) it->second += prod;
        }
    }
    std::map<std::tuple<int, int, int, int>, Scalar> rhs;
    for (const auto& [key1, c1] : split_rs.coeffs) {
        const auto& [i, a, v] = key1;
        auto it2 = inner_by_gen.find(a);
        if (it2 == inner_by_gen.end()) continue;
        for (const auto& [p, u, c2] : it2->second) {
            Scalar prod = c1 * c2;
            auto [it, inserted] = rhs.emplace(std::tuple{i, p, u, v}, prod);
            if (!inserted) it->second += prod;
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
        *witness = "(n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                   ", s=" + std::to_string(s) + ")";
    }
    return false;
}

}  // namespace koszul
