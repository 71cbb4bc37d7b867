#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "oracles.hpp"
#include "sheafkit/errors.hpp"
#include "sheafkit/sheaf.hpp"

using namespace sheafkit;

namespace {

Section shift_register_section() {
    Section s;
    s.values[Face::vertex(std::int64_t{0})] = {1, 1, 9};
    s.values[Face::vertex(std::int64_t{1})] = {1, 9, 2};
    s.values[Face::edge(std::int64_t{0}, std::int64_t{1})] = {1, 9};
    return s;
}

// All-inclusion variant of the consistency system (codim-1 and deeper), for
// checking that the codim-1 stacking loses nothing once validation passes.
RationalMatrix full_consistency_matrix(const Sheaf& s) {
    ConsistencySystem sys = consistency_matrix(s);
    std::map<Face, std::size_t> index;
    for (std::size_t i = 0; i < sys.face_order.size(); ++i) index[sys.face_order[i]] = i;

    auto pairs = s.base().inclusions();
    std::size_t rows = 0;
    for (const auto& [a, b] : pairs) rows += s.stalk_dim(b);

    RationalMatrix m(rows, sys.total_dim);
    std::size_t r0 = 0;
    for (const auto& [a, b] : pairs) {
        const RationalMatrix& r = *s.restriction(a, b);
        std::size_t off_a = sys.col_offset[index[a]];
        std::size_t off_b = sys.col_offset[index[b]];
        for (std::size_t i = 0; i < s.stalk_dim(b); ++i) {
            for (std::size_t j = 0; j < s.stalk_dim(a); ++j) m.at(r0 + i, off_a + j) = r.at(i, j);
            m.at(r0 + i, off_b + i) = -1;
        }
        r0 += s.stalk_dim(b);
    }
    return m;
}

}  // namespace

TEST_CASE("validate: graph sheaves satisfy the axiom vacuously") {
    gen::Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        Sheaf s = gen::random_graph_sheaf(rng, gen::random_graph_complex(rng));
        CHECK(validate(s).empty());
    }
}

TEST_CASE("validate: register sheaf over a window") {
    CHECK(validate(grouping_sheaf(3, 1, {0, 3})).empty());
}

TEST_CASE("validate: reports missing pieces") {
    Sheaf s(SimplicialComplex::timeline(0, 1));
    s.set_stalk_dim(Face::vertex(std::int64_t{0}), 2);
    s.set_stalk_dim(Face::vertex(std::int64_t{1}), 2);
    s.set_stalk_dim(Face::edge(std::int64_t{0}, std::int64_t{1}), 1);
    s.set_restriction(Face::vertex(std::int64_t{0}), Face::edge(std::int64_t{0}, std::int64_t{1}),
                      RationalMatrix(2, 2));  // wrong shape on purpose

    auto violations = validate(s);
    REQUIRE(violations.size() == 2);
    bool missing = false, shape = false;
    for (const auto& v : violations) {
        missing |= v.kind == SheafViolation::Kind::MissingRestriction;
        shape |= v.kind == SheafViolation::Kind::ShapeMismatch;
    }
    CHECK(missing);
    CHECK(shape);
}

TEST_CASE("validate: perturbed vertex-to-triangle map is caught on exactly its chains") {
    gen::Rng rng(103);
    auto base = SimplicialComplex::from_maximal_faces(
        {Face::of({Atom(std::string("a")), Atom(std::string("b")), Atom(std::string("c"))})});
    Sheaf s = gen::random_conjugated_sheaf(rng, base);
    REQUIRE(validate(s).empty());

    Face vertex = Face::vertex(std::string("a"));
    Face triangle = Face::of({Atom(std::string("a")), Atom(std::string("b")), Atom(std::string("c"))});
    RationalMatrix perturbed = *s.restriction(vertex, triangle);
    perturbed.at(0, 0) += 1;
    s.set_restriction(vertex, triangle, perturbed);

    auto violations = validate(s);
    REQUIRE(violations.size() == 2);  // one chain through each edge containing {a}
    for (const auto& v : violations) {
        CHECK(v.kind == SheafViolation::Kind::CompositionFailure);
        CHECK(v.a == vertex);
        CHECK(v.c == triangle);
        CHECK(vertex.proper_subset_of(v.b));
        CHECK(v.b.proper_subset_of(triangle));
    }
}

TEST_CASE("consistency_matrix: zero stalks give a zero-column system") {
    Sheaf s(SimplicialComplex::timeline(0, 2));
    for (const Face& f : s.base().faces()) s.set_stalk_dim(f, 0);
    for (const auto& [a, b] : s.base().inclusions()) s.set_restriction(a, b, RationalMatrix(0, 0));
    ConsistencySystem sys = consistency_matrix(s);
    CHECK(sys.matrix.cols() == 0);
    CHECK(global_sections(s).dimension() == 0);
}

TEST_CASE("consistency_matrix: single-slot track has unconstrained vertices") {
    Sheaf s = grouping_sheaf(1, 2, {0, 1});
    ConsistencySystem sys = consistency_matrix(s);
    CHECK(sys.matrix.rows() == 0);
    CHECK(sys.total_dim == 4);
    CHECK(global_sections(s).dimension() == 4);  // 2 vertices x value dim 2
}

TEST_CASE("global_sections: register dimensions match the independent oracle") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t t = 1; t <= 6; ++t) {
            Sheaf s = grouping_sheaf(n, 1, {0, static_cast<std::int64_t>(t) - 1});
            SectionSpace space = global_sections(s);
            CHECK(space.dimension() == t + n - 1);
            CHECK(space.dimension() == oracles::register_section_dim(n, 1, t));
            for (const Section& b : space.basis) CHECK(is_section(s, b));
        }
    }
}

TEST_CASE("global_sections: N=4 over six vertices") {
    CHECK(global_sections(grouping_sheaf(4, 1, {0, 5})).dimension() == 9);
}

TEST_CASE("global_sections: dimension equals stalk total minus oracle rank on random sheaves") {
    gen::Rng rng(107);
    for (int trial = 0; trial < 30; ++trial) {
        Sheaf s = gen::random_graph_sheaf(rng, gen::random_graph_complex(rng));
        ConsistencySystem sys = consistency_matrix(s);
        SectionSpace space = global_sections(s);
        CHECK(space.dimension() == sys.total_dim - oracles::rank_of(sys.matrix));
        for (const Section& b : space.basis) CHECK(is_section(s, b));

        // basis sections are independent as stacked vectors
        std::vector<RatVec> stacked;
        for (const Section& b : space.basis) stacked.push_back(flatten_section(sys, b));
        CHECK(rank(RationalMatrix::from_columns(stacked, sys.total_dim)) == space.dimension());
    }
}

TEST_CASE("codim-1 stacking loses nothing against the all-inclusions system") {
    gen::Rng rng(109);
    for (int trial = 0; trial < 10; ++trial) {
        auto base = SimplicialComplex::from_maximal_faces(
            {Face::of({Atom(1), Atom(2), Atom(3)}), Face::of({Atom(2), Atom(3), Atom(4)})});
        Sheaf s = gen::random_conjugated_sheaf(rng, base);
        ConsistencySystem sys = consistency_matrix(s);
        RationalMatrix full = full_consistency_matrix(s);
        CHECK(nullspace_basis(sys.matrix).size() == nullspace_basis(full).size());
    }
}

TEST_CASE("is_section: zero assignment always passes") {
    Sheaf s = grouping_sheaf(3, 1, {0, 1});
    Section zero;
    for (const Face& f : s.base().faces()) zero.values[f] = RatVec(s.stalk_dim(f));
    CHECK(is_section(s, zero));
}

TEST_CASE("is_section: shift-register assignment") {
    Sheaf s = grouping_sheaf(3, 1, {0, 1});
    CHECK(is_section(s, shift_register_section()));

    Section bad = shift_register_section();
    bad.values[Face::edge(std::int64_t{0}, std::int64_t{1})] = {9, 9};
    CHECK_FALSE(is_section(s, bad));

    Section wrong_size = shift_register_section();
    wrong_size.values[Face::vertex(std::int64_t{0})] = {1, 1};
    CHECK_THROWS_AS(is_section(s, wrong_size), DimensionError);
}

TEST_CASE("grouping_sheaf: single-term registers have empty overlap maps") {
    Sheaf s = grouping_sheaf(1, 1, {0, 2});
    for (const auto& [pair, m] : s.restrictions()) {
        CHECK(m.rows() == 0);
        CHECK(m.cols() == 1);
    }
    CHECK(s.stalk_dim(Face::edge(std::int64_t{0}, std::int64_t{1})) == 0);
}

TEST_CASE("grouping_sheaf: overlap maps reproduce the register transition") {
    Sheaf s = grouping_sheaf(3, 1, {0, 1});
    Face left = Face::vertex(std::int64_t{0});
    Face right = Face::vertex(std::int64_t{1});
    Face e = Face::edge(std::int64_t{0}, std::int64_t{1});

    RatVec overlap{1, 9};
    CHECK(*s.restriction(left, e) * RatVec{1, 1, 9} == overlap);
    CHECK(*s.restriction(right, e) * RatVec{1, 9, 2} == overlap);
}

TEST_CASE("grouping_sheaf: vector values act slot-blockwise") {
    Sheaf s = grouping_sheaf(2, 2, {0, 1});
    Face left = Face::vertex(std::int64_t{0});
    Face e = Face::edge(std::int64_t{0}, std::int64_t{1});
    CHECK(s.stalk_dim(left) == 4);
    CHECK(s.stalk_dim(e) == 2);
    // dropping the oldest slot keeps the newer pair of coordinates
    CHECK(*s.restriction(left, e) * RatVec{1, 2, 3, 4} == RatVec{3, 4});
}

TEST_CASE("grouping_sheaf: rejects degenerate parameters") {
    CHECK_THROWS_AS(grouping_sheaf(0, 1, {0, 1}), DimensionError);
    CHECK_THROWS_AS(grouping_sheaf(2, 0, {0, 1}), DimensionError);
}

TEST_CASE("analyses refuse invalid sheaves") {
    Sheaf s(SimplicialComplex::timeline(0, 1));
    s.set_stalk_dim(Face::vertex(std::int64_t{0}), 1);
    s.set_stalk_dim(Face::vertex(std::int64_t{1}), 1);
    s.set_stalk_dim(Face::edge(std::int64_t{0}, std::int64_t{1}), 1);
    // restrictions deliberately missing
    CHECK_THROWS_AS(global_sections(s), ValidationFailed);
}
