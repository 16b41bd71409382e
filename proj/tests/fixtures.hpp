#pragma once

#include <string>

// Inline presentation sources shared across the test suites.
namespace fixtures {

// one vertex, two loops; x^2 and xy + yx
inline std::string anti_commute(int maxdeg = 6) {
    return "field Q\n"
           "vertex v\n"
           "arrow x : v -> v\n"
           "arrow y : v -> v\n"
           "relation x.x\n"
           "relation x.y + y.x\n"
           "maxdeg " + std::to_string(maxdeg) + "\n";
}

// one vertex, two loops, all length-2 paths killed
inline std::string rad_square_zero(int maxdeg = 6) {
    return "field Q\n"
           "vertex v\n"
           "arrow x : v -> v\n"
           "arrow y : v -> v\n"
           "relation x.x\n"
           "relation x.y\n"
           "relation y.x\n"
           "relation y.y\n"
           "maxdeg " + std::to_string(maxdeg) + "\n";
}

// quantum exterior algebra on three generators
inline std::string quantum_exterior(const std::string& a, const std::string& b,
                                    const std::string& c, int maxdeg = 6) {
    return "field Q\n"
           "vertex v\n"
           "arrow x : v -> v\n"
           "arrow y : v -> v\n"
           "arrow z : v -> v\n"
           "param a = " + a + "\n"
           "param b = " + b + "\n"
           "param c = " + c + "\n"
           "relation x.x\n"
           "relation y.y\n"
           "relation z.z\n"
           "relation x.y + a*y.x\n"
           "relation x.z + b*z.x\n"
           "relation y.z + c*z.y\n"
           "maxdeg " + std::to_string(maxdeg) + "\n";
}

// one vertex, two loops, single relation xy (finite global dimension)
inline std::string one_relation_xy(int maxdeg = 5) {
    return "field Q\n"
           "vertex v\n"
           "arrow x : v -> v\n"
           "arrow y : v -> v\n"
           "relation x.y\n"
           "maxdeg " + std::to_string(maxdeg) + "\n";
}

// two vertices, two parallel arrows, no relations
inline std::string kronecker(int maxdeg = 3) {
    return "field Q\n"
           "vertex u\n"
           "vertex v\n"
           "arrow a : u -> v\n"
           "arrow b : u -> v\n"
           "maxdeg " + std::to_string(maxdeg) + "\n";
}

// linear quiver 1 -> 2 -> 3 with the composite arrow killed
inline std::string linear_a3(int maxdeg = 4) {
    return "field Q\n"
           "vertex v1\n"
           "vertex v2\n"
           "vertex v3\n"
           "arrow a : v1 -> v2\n"
           "arrow b : v2 -> v3\n"
           "relation a.b\n"
           "maxdeg " + std::to_string(maxdeg) + "\n";
}

// free algebra on one loop
inline std::string free_loop(int maxdeg = 4) {
    return "field Q\n"
           "vertex v\n"
           "arrow x : v -> v\n"
           "maxdeg " + std::to_string(maxdeg) + "\n";
}

}  // namespace fixtures
