#include "koszul/session.hpp"

namespace koszul {

Session::Session(Presentation pres, std::optional<int> maxdeg, int size_guard)
    : alg_(std::move(pres), maxdeg, size_guard),
      res_(compute_levels(alg_, alg_.degree_bound())),
      comult_(std::make_unique<ComultCache>(alg_, res_)) {}

void Session::override_level(int n, std::vector<TensorElement> gens) {
    koszul::override_level(alg_, res_, n, std::move(gens));
    comult_ = std::make_unique<ComultCache>(alg_, res_);
    exact_.reset();
}

const ExactnessReport& Session::exactness() {
    if (!exact_) {
        exact_ = verify_exactness(alg_, res_, *comult_, alg_.maxdeg(), alg_.maxdeg());
    }
    return *exact_;
}

void Session::require_koszul() {
    const ExactnessReport& report = exactness();
    if (!report.ok) {
        throw ExactnessError(report.first_failure->first, report.first_failure->second);
    }
}

}  // namespace koszul
