#include "sheafkit/simplicial_complex.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace sheafkit {

std::string atom_str(const Atom& a) {
    if (std::holds_alternative<std::int64_t>(a)) return std::to_string(std::get<std::int64_t>(a));
    return std::get<std::string>(a);
}

Atom make_atom(std::string_view token) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc() && ptr == token.data() + token.size() && std::to_string(value) == token) {
        return Atom(value);
    }
    return Atom(std::string(token));
}

Face Face::of(std::vector<Atom> atoms) {
    if (atoms.empty()) throw std::invalid_argument("a face needs at least one atom");
    std::sort(atoms.begin(), atoms.end());
    if (std::adjacent_find(atoms.begin(), atoms.end()) != atoms.end()) {
        throw std::invalid_argument("duplicate atom in face");
    }
    Face f;
    f.atoms_ = std::move(atoms);
    return f;
}

Face Face::vertex(Atom a) { return of({std::move(a)}); }

Face Face::edge(Atom a, Atom b) { return of({std::move(a), std::move(b)}); }

bool Face::subset_of(const Face& other) const {
    return std::includes(other.atoms_.begin(), other.atoms_.end(), atoms_.begin(), atoms_.end());
}

bool Face::proper_subset_of(const Face& other) const {
    return atoms_.size() < other.atoms_.size() && subset_of(other);
}

std::string Face::key() const {
    std::string out;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i) out += ',';
        out += atom_str(atoms_[i]);
    }
    return out;
}

bool operator<(const Face& a, const Face& b) {
    if (a.atoms_.size() != b.atoms_.size()) return a.atoms_.size() < b.atoms_.size();
    return a.atoms_ < b.atoms_;
}

namespace {

// Every nonempty subset of f, excluding f itself.
std::vector<Face> proper_subfaces(const Face& f) {
    const auto& atoms = f.atoms();
    std::size_t n = atoms.size();
    std::vector<Face> out;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << n); ++mask) {
        std::vector<Atom> chosen;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint64_t(1) << i)) chosen.push_back(atoms[i]);
        }
        out.push_back(Face::of(std::move(chosen)));
    }
    return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(const std::vector<Face>& faces) {
    SimplicialComplex c;
    c.faces_.insert(faces.begin(), faces.end());
    for (const Face& f : c.faces_) {
        for (const Face& sub : proper_subfaces(f)) {
            if (!c.faces_.count(sub)) {
                throw std::invalid_argument("face set is not downward closed: missing {" + sub.key() +
                                            "} under {" + f.key() + "}");
            }
        }
    }
    return c;
}

SimplicialComplex SimplicialComplex::from_maximal_faces(const std::vector<Face>& maximal) {
    if (maximal.empty()) throw std::invalid_argument("a complex needs at least one face");
    SimplicialComplex c;
    for (const Face& f : maximal) {
        c.faces_.insert(f);
        for (Face& sub : proper_subfaces(f)) c.faces_.insert(std::move(sub));
    }
    return c;
}

SimplicialComplex SimplicialComplex::timeline(std::int64_t first, std::int64_t last) {
    if (first > last) throw std::invalid_argument("timeline window with first > last");
    SimplicialComplex c;
    for (std::int64_t n = first; n <= last; ++n) {
        c.faces_.insert(Face::vertex(n));
        if (n < last) c.faces_.insert(Face::edge(n, n + 1));
    }
    return c;
}

std::vector<FacePair> SimplicialComplex::inclusions() const {
    std::vector<FacePair> out;
    for (const Face& f : faces_) {
        for (const Face& sub : proper_subfaces(f)) {
            if (faces_.count(sub)) out.emplace_back(sub, f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FacePair> SimplicialComplex::codim1_inclusions() const {
    std::vector<FacePair> out;
    for (const Face& f : faces_) {
        if (f.dimension() == 0) continue;
        const auto& atoms = f.atoms();
        for (std::size_t skip = 0; skip < atoms.size(); ++skip) {
            std::vector<Atom> chosen;
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                if (i != skip) chosen.push_back(atoms[i]);
            }
            Face sub = Face::of(std::move(chosen));
            if (faces_.count(sub)) out.emplace_back(std::move(sub), f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sheafkit
