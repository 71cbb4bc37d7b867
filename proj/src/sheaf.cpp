#include "sheafkit/sheaf.hpp"

#include <stdexcept>
#include <utility>

#include "sheafkit/errors.hpp"

namespace sheafkit {

void Sheaf::set_stalk_dim(const Face& f, std::size_t dim) {
    if (!base_.contains(f)) throw std::invalid_argument("stalk on unknown face {" + f.key() + "}");
    stalk_dims_[f] = dim;
}

void Sheaf::set_restriction(const Face& from, const Face& to, RationalMatrix m) {
    if (!base_.contains(from) || !base_.contains(to) || !from.proper_subset_of(to)) {
        throw std::invalid_argument("restriction on a pair that is not a face inclusion: {" + from.key() +
                                    "} -> {" + to.key() + "}");
    }
    restrictions_[{from, to}] = std::move(m);
}

const RationalMatrix* Sheaf::restriction(const Face& from, const Face& to) const {
    auto it = restrictions_.find({from, to});
    return it == restrictions_.end() ? nullptr : &it->second;
}

std::string to_string(SheafViolation::Kind kind) {
    switch (kind) {
        case SheafViolation::Kind::MissingStalk: return "missing-stalk";
        case SheafViolation::Kind::MissingRestriction: return "missing-restriction";
        case SheafViolation::Kind::ShapeMismatch: return "shape-mismatch";
        case SheafViolation::Kind::CompositionFailure: return "composition-failure";
    }
    return "unknown";
}

std::vector<SheafViolation> validate(const Sheaf& s) {
    std::vector<SheafViolation> out;
    for (const Face& f : s.base().faces()) {
        if (!s.has_stalk_dim(f)) {
            out.push_back({SheafViolation::Kind::MissingStalk, f, {}, {}, "no stalk dimension for {" + f.key() + "}"});
        }
    }

    auto pairs = s.base().inclusions();
    // usable(a,b): present and correctly shaped, so composites make sense
    auto usable = [&](const Face& a, const Face& b) {
        const RationalMatrix* r = s.restriction(a, b);
        return r && s.has_stalk_dim(a) && s.has_stalk_dim(b) && r->rows() == s.stalk_dim(b) &&
               r->cols() == s.stalk_dim(a);
    };

    for (const auto& [a, b] : pairs) {
        const RationalMatrix* r = s.restriction(a, b);
        if (!r) {
            out.push_back({SheafViolation::Kind::MissingRestriction, a, b, {},
                           "no restriction for {" + a.key() + "} -> {" + b.key() + "}"});
            continue;
        }
        if (s.has_stalk_dim(a) && s.has_stalk_dim(b) &&
            (r->rows() != s.stalk_dim(b) || r->cols() != s.stalk_dim(a))) {
            out.push_back({SheafViolation::Kind::ShapeMismatch, a, b, {},
                           "restriction {" + a.key() + "} -> {" + b.key() + "} is " + std::to_string(r->rows()) +
                               "x" + std::to_string(r->cols()) + ", expected " + std::to_string(s.stalk_dim(b)) +
                               "x" + std::to_string(s.stalk_dim(a))});
        }
    }

    for (const auto& [a, c] : pairs) {
        if (c.dimension() < a.dimension() + 2) continue;
        for (const Face& b : s.base().faces()) {
            if (!(a.proper_subset_of(b) && b.proper_subset_of(c))) continue;
            if (!usable(a, b) || !usable(b, c) || !usable(a, c)) continue;
            if (compose(*s.restriction(b, c), *s.restriction(a, b)) != *s.restriction(a, c)) {
                out.push_back({SheafViolation::Kind::CompositionFailure, a, b, c,
                               "chain {" + a.key() + "} -> {" + b.key() + "} -> {" + c.key() +
                                   "} does not compose to the stored map"});
            }
        }
    }
    return out;
}

void require_valid(const Sheaf& s) {
    auto violations = validate(s);
    if (violations.empty()) return;
    std::string msg = "sheaf fails validation:";
    for (const auto& v : violations) {
        msg += "\n  [" + to_string(v.kind) + "] " + v.detail;
    }
    throw ValidationFailed(msg);
}

const RatVec& Section::at(const Face& f) const {
    auto it = values.find(f);
    if (it == values.end()) throw DimensionError("section has no value on face {" + f.key() + "}");
    return it->second;
}

ConsistencySystem consistency_matrix(const Sheaf& s) {
    require_valid(s);
    ConsistencySystem sys;
    std::map<Face, std::size_t> index;
    for (const Face& f : s.base().faces()) {
        index[f] = sys.face_order.size();
        sys.face_order.push_back(f);
        sys.col_offset.push_back(sys.total_dim);
        sys.total_dim += s.stalk_dim(f);
    }

    auto pairs = s.base().codim1_inclusions();
    std::size_t rows = 0;
    for (const auto& [a, b] : pairs) rows += s.stalk_dim(b);

    sys.matrix = RationalMatrix(rows, sys.total_dim);
    std::size_t r0 = 0;
    for (const auto& [a, b] : pairs) {
        const RationalMatrix& r = *s.restriction(a, b);
        std::size_t off_a = sys.col_offset[index[a]];
        std::size_t off_b = sys.col_offset[index[b]];
        for (std::size_t i = 0; i < s.stalk_dim(b); ++i) {
            for (std::size_t j = 0; j < s.stalk_dim(a); ++j) sys.matrix.at(r0 + i, off_a + j) = r.at(i, j);
            sys.matrix.at(r0 + i, off_b + i) = -1;
        }
        r0 += s.stalk_dim(b);
    }
    return sys;
}

SectionSpace global_sections(const Sheaf& s) {
    ConsistencySystem sys = consistency_matrix(s);
    SectionSpace space;
    for (const RatVec& v : nullspace_basis(sys.matrix)) {
        space.basis.push_back(unflatten_section(sys, v));
    }
    return space;
}

bool is_section(const Sheaf& s, const Section& candidate) {
    for (const Face& f : s.base().faces()) {
        if (candidate.at(f).size() != s.stalk_dim(f)) {
            throw DimensionError("section value on {" + f.key() + "} has size " +
                                 std::to_string(candidate.at(f).size()) + ", stalk has dimension " +
                                 std::to_string(s.stalk_dim(f)));
        }
    }
    for (const auto& [a, b] : s.base().inclusions()) {
        const RationalMatrix* r = s.restriction(a, b);
        if (!r) throw DimensionError("sheaf is missing the restriction {" + a.key() + "} -> {" + b.key() + "}");
        if (*r * candidate.at(a) != candidate.at(b)) return false;
    }
    return true;
}

RatVec flatten_section(const ConsistencySystem& sys, const Section& s) {
    RatVec flat(sys.total_dim);
    for (std::size_t i = 0; i < sys.face_order.size(); ++i) {
        const RatVec& v = s.at(sys.face_order[i]);
        for (std::size_t j = 0; j < v.size(); ++j) flat[sys.col_offset[i] + j] = v[j];
    }
    return flat;
}

Section unflatten_section(const ConsistencySystem& sys, const RatVec& flat) {
    if (flat.size() != sys.total_dim) throw DimensionError("flat section vector has the wrong length");
    Section s;
    for (std::size_t i = 0; i < sys.face_order.size(); ++i) {
        std::size_t end = i + 1 < sys.face_order.size() ? sys.col_offset[i + 1] : sys.total_dim;
        s.values[sys.face_order[i]] = RatVec(flat.begin() + sys.col_offset[i], flat.begin() + end);
    }
    return s;
}

Sheaf grouping_sheaf(std::size_t terms, std::size_t value_dim, const Window& window) {
    if (terms < 1) throw DimensionError("grouping sheaf needs at least one term");
    if (value_dim < 1) throw DimensionError("grouping sheaf needs a value dimension of at least 1");

    Sheaf s(SimplicialComplex::timeline(window.first, window.last));
    std::size_t vdim = terms * value_dim;
    std::size_t edim = (terms - 1) * value_dim;

    for (std::int64_t n = window.first; n <= window.last; ++n) {
        s.set_stalk_dim(Face::vertex(n), vdim);
    }
    for (std::int64_t n = window.first; n < window.last; ++n) {
        Face e = Face::edge(n, n + 1);
        s.set_stalk_dim(e, edim);

        RationalMatrix drop_oldest(edim, vdim);
        RationalMatrix drop_newest(edim, vdim);
        for (std::size_t i = 0; i < edim; ++i) {
            drop_oldest.at(i, i + value_dim) = 1;
            drop_newest.at(i, i) = 1;
        }
        s.set_restriction(Face::vertex(n), e, std::move(drop_oldest));
        s.set_restriction(Face::vertex(n + 1), e, std::move(drop_newest));
    }
    return s;
}

}  // namespace sheafkit
