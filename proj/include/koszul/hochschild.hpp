#pragma once

#include <functional>

#include "koszul/comult.hpp"

namespace koszul {

/// Hochschild cochain of degree n: one algebra element per level-n
/// generator, confined to the generator's vertex-pair block. Values may mix
/// internal degrees; weight-homogeneous slices are extracted on demand.
struct Cochain {
    int degree = 0;
    std::vector<AlgebraElement> values;

    bool is_zero() const;
    bool operator==(const Cochain& o) const;
};

Cochain zero_cochain(const Context& c, int degree);
Cochain cochain_add(const Cochain& a, const Cochain& b);
Cochain cochain_sub(const Cochain& a, const Cochain& b);
Cochain cochain_scaled(const Cochain& a, const Scalar& s);
void validate_cochain(const Context& c, const Cochain& x);
/// Weight-homogeneous parts, keyed by internal degree.
std::map<int, Cochain> weight_components(const Context& c, const Cochain& x);

/// The dualized differential applied to a degree-n cochain; the result has
/// degree n+1 and internal degree shifted up by one.
Cochain coboundary(const Context& c, const Cochain& x);

struct HHDims {
    int n = 0;
    int weight = 0;
    int dim_space = 0;
    int dim_ker = 0;
    int dim_im = 0;
    int dim_hh = 0;
};

/// Exact dimensions of cocycles, coboundaries and their quotient at one
/// internal degree.
HHDims cohomology_dims(const Context& c, int n, int weight);
/// Every internal degree of a finite dimensional algebra; throws
/// WeightRequiredError otherwise.
std::vector<HHDims> cohomology_dims_all(const Context& c, int n);

/// Cup product representative per the splitting coefficients; bilinear,
/// exact at the cochain level.
Cochain cup(const Context& c, const Cochain& eta, const Cochain& theta);

struct CohomologyClass {
    int degree = 0;
    std::map<int, SVec> coords;  // weight -> coordinates in the canonical basis

    bool is_zero() const { return coords.empty(); }
    bool operator==(const CohomologyClass& o) const;
};

/// Canonical coordinates of a cocycle modulo coboundaries; throws
/// NotCocycleError when the coboundary of the input is nonzero.
CohomologyClass reduce_class(const Context& c, const Cochain& x);

/// Canonical cocycle representatives of a basis of the (n, weight)
/// cohomology.
std::vector<Cochain> cohomology_basis(const Context& c, int n, int weight);

/// Composing consecutive differentials of the bimodule resolution gives
/// zero on every generator, for 2 <= n <= top.
bool verify_complex(const Context& c, int top, std::string* witness = nullptr);

/// Same check against an arbitrary slice source (tests corrupt one).
using SliceFn = std::function<const ComultSlice&(int, int)>;
bool verify_complex_with(const Context& c, int top, const SliceFn& slices,
                         std::string* witness = nullptr);

}  // namespace koszul
