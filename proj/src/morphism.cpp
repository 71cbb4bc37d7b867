#include "sheafkit/morphism.hpp"

#include <string>
#include <utility>

#include "sheafkit/errors.hpp"

namespace sheafkit {

Morphism make_morphism(Sheaf source, Sheaf target, std::map<Face, RationalMatrix> components) {
    if (source.base() != target.base()) {
        throw DimensionError("morphism between sheaves on different base complexes");
    }
    for (const auto& [f, m] : components) {
        if (!source.base().contains(f)) {
            throw DimensionError("morphism component on unknown face {" + f.key() + "}");
        }
        if (m.rows() != target.stalk_dim(f) || m.cols() != source.stalk_dim(f)) {
            throw DimensionError("component on {" + f.key() + "} is " + std::to_string(m.rows()) + "x" +
                                 std::to_string(m.cols()) + ", expected " +
                                 std::to_string(target.stalk_dim(f)) + "x" +
                                 std::to_string(source.stalk_dim(f)));
        }
    }
    for (const Face& f : source.base().faces()) {
        if (!components.count(f)) {
            components[f] = RationalMatrix(target.stalk_dim(f), source.stalk_dim(f));
        }
    }
    return Morphism{std::move(source), std::move(target), std::move(components)};
}

Morphism identity_morphism(const Sheaf& s) {
    std::map<Face, RationalMatrix> comps;
    for (const Face& f : s.base().faces()) comps[f] = RationalMatrix::identity(s.stalk_dim(f));
    return make_morphism(s, s, std::move(comps));
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (g.source != f.target) throw DimensionError("morphisms do not compose: g.source differs from f.target");
    std::map<Face, RationalMatrix> comps;
    for (const auto& [face, fm] : f.component) comps[face] = compose(g.component.at(face), fm);
    return make_morphism(f.source, g.target, std::move(comps));
}

std::vector<MorphismViolation> validate_morphism(const Morphism& m) {
    require_valid(m.source);
    require_valid(m.target);
    if (m.source.base() != m.target.base()) {
        throw DimensionError("morphism between sheaves on different base complexes");
    }
    for (const Face& f : m.source.base().faces()) {
        auto it = m.component.find(f);
        if (it == m.component.end()) throw DimensionError("morphism has no component on {" + f.key() + "}");
        if (it->second.rows() != m.target.stalk_dim(f) || it->second.cols() != m.source.stalk_dim(f)) {
            throw DimensionError("component on {" + f.key() + "} has the wrong shape");
        }
    }

    std::vector<MorphismViolation> out;
    for (const auto& [a, b] : m.source.base().inclusions()) {
        RationalMatrix lhs = compose(m.component.at(b), *m.source.restriction(a, b));
        RationalMatrix rhs = compose(*m.target.restriction(a, b), m.component.at(a));
        if (lhs != rhs) out.push_back({a, b, std::move(lhs), std::move(rhs)});
    }
    return out;
}

void require_valid(const Morphism& m) {
    auto violations = validate_morphism(m);
    if (violations.empty()) return;
    std::string msg = "morphism fails commutativity on:";
    for (const auto& v : violations) msg += " {" + v.sub.key() + "}->{" + v.super.key() + "}";
    throw ValidationFailed(msg);
}

InducedMap induced_map(const Morphism& m) {
    require_valid(m);

    InducedMap out;
    out.source_space = global_sections(m.source);
    out.target_space = global_sections(m.target);

    ConsistencySystem target_sys = consistency_matrix(m.target);
    RationalMatrix target_basis(target_sys.total_dim, out.target_space.dimension());
    for (std::size_t j = 0; j < out.target_space.dimension(); ++j) {
        RatVec flat = flatten_section(target_sys, out.target_space.basis[j]);
        for (std::size_t i = 0; i < flat.size(); ++i) target_basis.at(i, j) = flat[i];
    }

    out.matrix = RationalMatrix(out.target_space.dimension(), out.source_space.dimension());
    for (std::size_t j = 0; j < out.source_space.dimension(); ++j) {
        Section image;
        for (const Face& f : m.source.base().faces()) {
            image.values[f] = m.component.at(f) * out.source_space.basis[j].at(f);
        }
        if (!is_section(m.target, image)) {
            throw ImageNotSection("image of a source basis section fails the target section test");
        }
        auto coords = solve_exact(target_basis, flatten_section(target_sys, image));
        if (!coords) {
            throw ImageNotSection("image section has no coordinates in the target basis");
        }
        for (std::size_t i = 0; i < coords->size(); ++i) out.matrix.at(i, j) = (*coords)[i];
    }
    return out;
}

KernelSheaf kernel_sheaf(const Morphism& m) {
    require_valid(m);

    Sheaf kernel(m.source.base());
    std::map<Face, RationalMatrix> embed;
    for (const Face& f : m.source.base().faces()) {
        auto basis = nullspace_basis(m.component.at(f));
        embed[f] = RationalMatrix::from_columns(basis, m.source.stalk_dim(f));
        kernel.set_stalk_dim(f, basis.size());
    }

    for (const auto& [a, b] : m.source.base().inclusions()) {
        const RationalMatrix& r = *m.source.restriction(a, b);
        RationalMatrix pushed = compose(r, embed[a]);
        RationalMatrix in_kernel_coords(kernel.stalk_dim(b), kernel.stalk_dim(a));
        for (std::size_t j = 0; j < pushed.cols(); ++j) {
            auto coords = solve_exact(embed[b], pushed.column(j));
            if (!coords) {
                throw KernelNotPreserved("restriction {" + a.key() + "} -> {" + b.key() +
                                         "} leaves the facewise kernel");
            }
            for (std::size_t i = 0; i < coords->size(); ++i) in_kernel_coords.at(i, j) = (*coords)[i];
        }
        kernel.set_restriction(a, b, std::move(in_kernel_coords));
    }

    Morphism embedding = make_morphism(kernel, m.source, std::move(embed));
    return {std::move(kernel), std::move(embedding)};
}

SectionSpace kernel_of_induced(const Morphism& m) {
    InducedMap ind = induced_map(m);
    SectionSpace out;
    for (const RatVec& coeff : nullspace_basis(ind.matrix)) {
        Section combo;
        for (const Face& f : m.source.base().faces()) {
            RatVec value(m.source.stalk_dim(f));
            for (std::size_t j = 0; j < coeff.size(); ++j) {
                if (coeff[j].is_zero()) continue;
                const RatVec& basis_value = ind.source_space.basis[j].at(f);
                for (std::size_t i = 0; i < value.size(); ++i) value[i] += coeff[j] * basis_value[i];
            }
            combo.values[f] = std::move(value);
        }
        out.basis.push_back(std::move(combo));
    }
    return out;
}

}  // namespace sheafkit
