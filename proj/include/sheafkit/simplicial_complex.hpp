#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sheafkit {

/// Vertex identifier. Integer atoms order numerically and before string
/// atoms, so traversal orders and face keys are stable across runs.
using Atom = std::variant<std::int64_t, std::string>;

std::string atom_str(const Atom& a);

/// Tokens that are canonical decimal integers become integer atoms
/// ("7" -> 7); everything else, including "007", stays a string.
Atom make_atom(std::string_view token);

/// Nonempty set of distinct atoms, stored sorted; dimension = size - 1.
class Face {
public:
    Face() = default;

    /// Sorts the atoms; throws std::invalid_argument on empty input or
    /// duplicate atoms.
    static Face of(std::vector<Atom> atoms);
    static Face vertex(Atom a);
    static Face edge(Atom a, Atom b);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t dimension() const { return atoms_.size() - 1; }

    bool subset_of(const Face& other) const;
    bool proper_subset_of(const Face& other) const;

    /// Sorted atoms joined by commas, e.g. "v1,v2".
    std::string key() const;

    /// Faces order by (dimension, atom sequence); this is the canonical
    /// face order used everywhere determinism matters.
    friend bool operator<(const Face& a, const Face& b);
    friend bool operator==(const Face& a, const Face& b) { return a.atoms_ == b.atoms_; }
    friend bool operator!=(const Face& a, const Face& b) { return !(a == b); }

private:
    std::vector<Atom> atoms_;
};

using FacePair = std::pair<Face, Face>;

/// Downward-closed family of faces.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Keeps the faces as given after checking downward closure; throws
    /// std::invalid_argument when a subset of a stored face is missing.
    static SimplicialComplex from_faces(const std::vector<Face>& faces);

    /// Downward closure of the given faces.
    static SimplicialComplex from_maximal_faces(const std::vector<Face>& maximal);

    /// Path complex with integer vertices first..last and edges {n, n+1}.
    /// Throws std::invalid_argument when first > last.
    static SimplicialComplex timeline(std::int64_t first, std::int64_t last);

    const std::set<Face>& faces() const { return faces_; }
    bool contains(const Face& f) const { return faces_.count(f) != 0; }
    std::size_t size() const { return faces_.size(); }

    /// All proper-subset pairs (sub, super) among stored faces, ordered by
    /// (sub, super) in the canonical face order.
    std::vector<FacePair> inclusions() const;

    /// The pairs where the sub-face has exactly one fewer vertex.
    std::vector<FacePair> codim1_inclusions() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.faces_ == b.faces_;
    }
    friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) { return !(a == b); }

private:
    std::set<Face> faces_;
};

}  // namespace sheafkit
