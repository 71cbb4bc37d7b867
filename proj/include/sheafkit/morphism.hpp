#pragma once

#include <map>
#include <vector>

#include "sheafkit/sheaf.hpp"

namespace sheafkit {

/// Facewise linear maps between two sheaves on one base complex. The
/// commutativity requirement (component after source restriction equals
/// target restriction after component) is checked by validate_morphism().
struct Morphism {
    Sheaf source;
    Sheaf target;
    std::map<Face, RationalMatrix> component;

    friend bool operator==(const Morphism& a, const Morphism& b) {
        return a.source == b.source && a.target == b.target && a.component == b.component;
    }
    friend bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }
};

/// Builds a morphism, filling omitted faces with zero maps of the right
/// shape. Throws DimensionError on base mismatch or misshapen components.
Morphism make_morphism(Sheaf source, Sheaf target, std::map<Face, RationalMatrix> components = {});

Morphism identity_morphism(const Sheaf& s);

/// Facewise composition g∘f. Throws DimensionError when f.target and
/// g.source disagree.
Morphism compose(const Morphism& g, const Morphism& f);

struct MorphismViolation {
    Face sub, super;
    RationalMatrix lhs;  // component(super) · source.restriction(sub, super)
    RationalMatrix rhs;  // target.restriction(sub, super) · component(sub)
};

/// One entry per inclusion whose commuting square fails, with both sides of
/// the square. Requires both sheaves to pass validate(); throws
/// DimensionError on misshapen components.
std::vector<MorphismViolation> validate_morphism(const Morphism& m);

/// Throws ValidationFailed when validate_morphism() reports anything.
void require_valid(const Morphism& m);

/// The induced section-space map, as a matrix in the canonical bases
/// produced by global_sections().
struct InducedMap {
    RationalMatrix matrix;  // target dimension x source dimension
    SectionSpace source_space;
    SectionSpace target_space;
};

InducedMap induced_map(const Morphism& m);

/// Facewise kernel of a morphism, with stalks in RREF-canonical kernel
/// coordinates, plus the embedding back into the morphism's source.
struct KernelSheaf {
    Sheaf sheaf;
    Morphism embedding;
};

KernelSheaf kernel_sheaf(const Morphism& m);

/// Nullspace of the induced matrix, returned as sections of the source.
SectionSpace kernel_of_induced(const Morphism& m);

}  // namespace sheafkit
