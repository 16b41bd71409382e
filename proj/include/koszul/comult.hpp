#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

#include "koszul/resolution.hpp"

namespace koszul {

/// One (n, r) slice of the comultiplicative structure constants: the
/// coefficients expressing each level-n generator through products of a
/// level-r and a level-(n-r) generator. Keys are (i, p, q) with i at level n,
/// p at level r, q at level n-r; absent keys are zero.
struct ComultSlice {
    int n = 0;
    int r = 0;
    std::map<std::tuple<int, int, int>, Scalar> coeffs;

    const Scalar* find(int i, int p, int q) const;
};

/// Lazily computed, cached slices. Thread safe; each slice is computed once.
class ComultCache {
public:
    ComultCache(const Algebra& alg, const ResolutionData& data);

    const Algebra& algebra() const { return alg_; }
    const ResolutionData& resolution() const { return data_; }

    const ComultSlice& slice(int n, int r) const;

    /// Recomputes both sides of the defining identity for every generator.
    bool verify_reconstruction(int n, int r, std::string* witness = nullptr) const;
    /// Compatibility of splitting at r then s against splitting at r+s.
    bool verify_coassociativity(int n, int r, int s, std::string* witness = nullptr) const;

private:
    ComultSlice compute_slice(int n, int r) const;

    const Algebra& alg_;
    const ResolutionData& data_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<ComultSlice>> slices_;
};

/// The pieces every higher computation works with; bundled by Session.
struct Context {
    const Algebra& alg;
    const ResolutionData& res;
    const ComultCache& comult;
};

}  // namespace koszul
