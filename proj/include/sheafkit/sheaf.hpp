#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sheafkit/matrix.hpp"
#include "sheafkit/simplicial_complex.hpp"

namespace sheafkit {

/// A rational vector space dimension on every face and a matrix on every
/// face inclusion. The composition axiom is checked by validate(), not at
/// construction, so partially built or deliberately broken sheaves can be
/// inspected.
class Sheaf {
public:
    Sheaf() = default;
    explicit Sheaf(SimplicialComplex base) : base_(std::move(base)) {}

    const SimplicialComplex& base() const { return base_; }

    /// Throws std::invalid_argument when the face is not in the base.
    void set_stalk_dim(const Face& f, std::size_t dim);

    /// Throws std::invalid_argument when (from, to) is not an inclusion of
    /// base faces. Shape agreement is left to validate().
    void set_restriction(const Face& from, const Face& to, RationalMatrix m);

    bool has_stalk_dim(const Face& f) const { return stalk_dims_.count(f) != 0; }
    /// Throws std::out_of_range when unset.
    std::size_t stalk_dim(const Face& f) const { return stalk_dims_.at(f); }

    /// Null when no matrix is stored for the pair.
    const RationalMatrix* restriction(const Face& from, const Face& to) const;

    const std::map<Face, std::size_t>& stalk_dims() const { return stalk_dims_; }
    const std::map<FacePair, RationalMatrix>& restrictions() const { return restrictions_; }

    friend bool operator==(const Sheaf& a, const Sheaf& b) {
        return a.base_ == b.base_ && a.stalk_dims_ == b.stalk_dims_ && a.restrictions_ == b.restrictions_;
    }
    friend bool operator!=(const Sheaf& a, const Sheaf& b) { return !(a == b); }

private:
    SimplicialComplex base_;
    std::map<Face, std::size_t> stalk_dims_;
    std::map<FacePair, RationalMatrix> restrictions_;
};

struct SheafViolation {
    enum class Kind { MissingStalk, MissingRestriction, ShapeMismatch, CompositionFailure };
    Kind kind = Kind::MissingStalk;
    Face a, b, c;  // c is set for composition failures: the chain a -> b -> c
    std::string detail;
};

std::string to_string(SheafViolation::Kind kind);

/// Empty result means the sheaf satisfies all axioms: every stalk set,
/// every inclusion carries a matrix of the right shape, and every chain
/// a -> b -> c composes exactly.
std::vector<SheafViolation> validate(const Sheaf& s);

/// Throws ValidationFailed with a digest of the violations.
void require_valid(const Sheaf& s);

/// A stalk value on every face.
struct Section {
    std::map<Face, RatVec> values;

    const RatVec& at(const Face& f) const;

    friend bool operator==(const Section& a, const Section& b) { return a.values == b.values; }
    friend bool operator!=(const Section& a, const Section& b) { return !(a == b); }
};

struct SectionSpace {
    std::vector<Section> basis;
    std::size_t dimension() const { return basis.size(); }
};

/// The stacked linear system whose kernel is the global section space.
/// Faces are laid out in canonical order; col_offset[i] is the first
/// coordinate of face_order[i]. One block row per codimension-1 inclusion
/// (a, b), encoding restriction(a,b)·s(a) - s(b) = 0.
struct ConsistencySystem {
    RationalMatrix matrix;
    std::vector<Face> face_order;
    std::vector<std::size_t> col_offset;
    std::size_t total_dim = 0;
};

/// Requires validate(s) to pass.
ConsistencySystem consistency_matrix(const Sheaf& s);

/// Kernel of the consistency system, re-sliced into per-face values.
/// Requires validate(s) to pass.
SectionSpace global_sections(const Sheaf& s);

/// True iff every inclusion constraint holds exactly. Throws DimensionError
/// when the candidate misses a face or carries a wrong-sized value.
bool is_section(const Sheaf& s, const Section& candidate);

RatVec flatten_section(const ConsistencySystem& sys, const Section& s);
Section unflatten_section(const ConsistencySystem& sys, const RatVec& flat);

/// Inclusive timeline window [first, last].
struct Window {
    std::int64_t first = 0;
    std::int64_t last = 0;

    std::size_t vertex_count() const { return static_cast<std::size_t>(last - first + 1); }
};

/// Shift-register sheaf over a timeline window: vertex stalks hold `terms`
/// value slots (oldest first), edge stalks hold the overlap of `terms - 1`
/// slots. The older vertex of an edge restricts by dropping its oldest
/// slot, the newer vertex by dropping its newest.
Sheaf grouping_sheaf(std::size_t terms, std::size_t value_dim, const Window& window);

}  // namespace sheafkit
