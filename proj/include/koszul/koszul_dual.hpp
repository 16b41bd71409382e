#pragma once

#include "koszul/hochschild.hpp"

namespace koszul {

/// Homogeneous element of the dual (Ext) algebra in the basis dual to the
/// level generators.
struct ExtElement {
    int degree = 0;
    SVec coords;

    bool is_zero() const { return coords.empty(); }
    bool operator==(const ExtElement& o) const {
        return degree == o.degree && svec_equal(coords, o.coords);
    }
};

ExtElement ext_basis(const Context& c, int n, int i);
ExtElement ext_add(const ExtElement& a, const ExtElement& b);
ExtElement ext_scaled(const ExtElement& a, const Scalar& s);

/// Product in the dual algebra, read off the transposed splitting
/// coefficients. An empty target level gives zero.
ExtElement dual_product(const Context& c, const ExtElement& a, const ExtElement& b);

/// Canonical basis of the degree-n part of the graded centre of the dual
/// algebra, characterized by commutation against degrees zero and one.
std::vector<ExtElement> graded_centre(const Context& c, int n);

/// Vertex-coefficient part of a cochain, as a dual algebra element. This is
/// the cochain-level form of the canonical map out of Hochschild cohomology;
/// coboundaries map to zero.
ExtElement ext_image(const Context& c, const Cochain& x);

/// The scalar-valued degree-n cocycles map onto exactly the graded centre.
bool verify_image_matches_centre(const Context& c, int n, std::string* witness = nullptr);

/// Coefficient identity for the chain maps lifting dual basis elements.
bool verify_lifting_identity(const Context& c, int n, int r, std::string* witness = nullptr);

/// Associativity of the dual product on all basis triples up to a total
/// degree.
bool verify_dual_associativity(const Context& c, int total_degree,
                               std::string* witness = nullptr);

/// Every computed degree-n centre element sign-commutes against every basis
/// element of complementary degree (redundant full check).
bool verify_centre_commutation(const Context& c, int n, std::string* witness = nullptr);

}  // namespace koszul
