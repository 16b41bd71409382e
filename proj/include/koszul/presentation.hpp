#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/linalg.hpp"
#include "koszul/scalar.hpp"

namespace koszul {

struct Arrow {
    std::string name;
    int src = -1;
    int tgt = -1;
};

/// Finite quiver: ordered vertices and arrows, all names globally unique.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& name) const;
    int arrow_index(const std::string& name) const;
    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_arrows() const { return static_cast<int>(arrows.size()); }
};

/// Composable arrow sequence. Degree 0 paths are the trivial paths at a
/// vertex; for positive degree the source vertex is kept in sync with the
/// first arrow.
struct Path {
    int vertex = -1;
    std::vector<int> arrows;

    int degree() const { return static_cast<int>(arrows.size()); }
    int source() const { return vertex; }
    int target(const Quiver& q) const {
        return arrows.empty() ? vertex : q.arrows[arrows.back()].tgt;
    }

    static Path trivial(int v) { return Path{v, {}}; }
    static Path of_arrow(const Quiver& q, int a) { return Path{q.arrows[a].src, {a}}; }

    std::string str(const Quiver& q) const;
};

bool operator==(const Path& a, const Path& b);
/// Length first, then lexicographic by arrow index (vertex index for trivial
/// paths). This is the path order every reported basis refers to.
bool operator<(const Path& a, const Path& b);

bool paths_composable(const Quiver& q, const Path& a, const Path& b);
Path path_concat(const Quiver& q, const Path& a, const Path& b);
/// Parses "x.y.z" (arrow names) or a single vertex name (trivial path).
Path parse_path(const Quiver& q, const std::string& text);

/// k-linear combination of equal-length paths: an element of the n-fold
/// tensor power of the arrow bimodule.
struct TensorElement {
    int degree = 0;
    std::map<Path, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const Path& p, const Scalar& c);
    TensorElement& operator+=(const TensorElement& o);
    TensorElement scaled(const Scalar& c) const;

    /// (source, target) when every term shares them, nullopt otherwise.
    /// The zero element is not uniform.
    std::optional<std::pair<int, int>> uniform_endpoints(const Quiver& q) const;

    bool operator==(const TensorElement& o) const;
};

TensorElement tensor_concat(const Quiver& q, const TensorElement& a, const TensorElement& b);
/// Nonzero projections e_u * x * e_v, in (u, v)-lexicographic order.
std::vector<TensorElement> uniform_components(const Quiver& q, const TensorElement& x);

/// A quadratic presentation kQ/I with a fixed ground field, instantiated
/// scalar parameters and a truncation bound for the session.
struct Presentation {
    Field field;
    Quiver quiver;
    std::vector<std::pair<std::string, Scalar>> params;
    std::vector<TensorElement> relations;  // homogeneous of degree 2
    int maxdeg = 5;

    bool operator==(const Presentation& o) const;
};

/// Parses the line-oriented presentation format:
///
///   field Q | field Fp <p>
///   vertex <name>
///   arrow <name> : <src> -> <tgt>
///   param <name> = <rational>
///   relation <term> (+|-) <term> ...    term = [<coeff>*]<arrow>.<arrow>
///   maxdeg <N>
///
/// '#' starts a comment. Parameters are substituted into relation
/// coefficients immediately.
Presentation parse_presentation(const std::string& text);

/// Canonical text form; parse_presentation(serialize_presentation(p)) == p.
std::string serialize_presentation(const Presentation& p);

}  // namespace koszul
