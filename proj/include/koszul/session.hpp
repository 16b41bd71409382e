#pragma once

#include "koszul/comult.hpp"

namespace koszul {

/// Owns one full computation: the algebra session, the syzygy levels (one
/// above the reported degree bound, so differentials out of the top degree
/// exist) and the slice cache, plus the exactness gate for consumers that
/// require Koszul input.
class Session {
public:
    explicit Session(Presentation pres, std::optional<int> maxdeg = std::nullopt,
                     int size_guard = 20000);
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    const Algebra& algebra() const { return alg_; }
    const ResolutionData& resolution() const { return res_; }
    const ComultCache& comult() const { return *comult_; }
    Context ctx() const { return {alg_, res_, *comult_}; }
    int maxdeg() const { return alg_.maxdeg(); }

    /// Swaps in a user-chosen basis for one level; downstream tables are
    /// recomputed lazily against the new basis.
    void override_level(int n, std::vector<TensorElement> gens);

    const ExactnessReport& exactness();
    /// Refuses non-Koszul input: throws at the first inexact spot.
    void require_koszul();

private:
    Algebra alg_;
    ResolutionData res_;
    std::unique_ptr<ComultCache> comult_;
    std::optional<ExactnessReport> exact_;
};

}  // namespace koszul
