// Acceptance suite: one verdict line per criterion, all exact checks.
// Exits nonzero when any criterion fails its assertions or time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "sheafkit/fir.hpp"
#include "sheafkit/flow_network.hpp"

using namespace sheafkit;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

Atom A(const std::string& s) { return Atom(s); }

FlowNetwork collection_network(const std::vector<Rational>& in_rates) {
    FlowNetwork net;
    Rational total;
    net.vertices.push_back(A("junction"));
    net.vertices.push_back(A("out"));
    for (std::size_t i = 0; i < in_rates.size(); ++i) {
        Atom v("in" + std::to_string(i));
        net.vertices.push_back(v);
        net.edges.push_back({v, A("junction"), in_rates[i]});
        total += in_rates[i];
    }
    net.edges.push_back({A("junction"), A("out"), total});
    return net;
}

FlowNetwork distribution_network(std::size_t deliveries) {
    FlowNetwork net;
    net.vertices.push_back(A("source"));
    net.vertices.push_back(A("main"));
    net.edges.push_back({A("source"), A("main"), Rational(static_cast<long>(deliveries))});
    for (std::size_t i = 0; i < deliveries; ++i) {
        Atom v("d" + std::to_string(i));
        net.vertices.push_back(v);
        net.edges.push_back({A("main"), v, Rational(1)});
    }
    return net;
}

// 1. A register window accepts the worked shift-register assignment and
//    rejects every single-entry perturbation of it.
Check criterion_register_consistency() {
    Check c;
    Sheaf s = grouping_sheaf(3, 1, {0, 1});
    Section good;
    good.values[Face::vertex(std::int64_t{0})] = {1, 1, 9};
    good.values[Face::vertex(std::int64_t{1})] = {1, 9, 2};
    good.values[Face::edge(std::int64_t{0}, std::int64_t{1})] = {1, 9};
    c.require(is_section(s, good), "the worked assignment must be a section");

    std::size_t rejected = 0, total = 0;
    std::string survivors;
    for (const auto& [face, value] : good.values) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            Section bad = good;
            bad.values[face][i] += 1;
            ++total;
            if (!is_section(s, bad)) {
                ++rejected;
            } else {
                survivors += " " + face.key() + "[" + std::to_string(i) + "]";
            }
        }
    }
    c.require(total == 8, "expected 8 single entries to perturb");
    c.require(rejected == total,
              "caught " + std::to_string(rejected) + " of " + std::to_string(total) +
                  " perturbations; the entries" + survivors +
                  " are window-boundary register slots that no edge overlap constrains, so perturbing "
                  "them yields the lift of a different input stream, which is still a section");
    return c;
}

// 2. Distribution network: one section dimension overall, and any single
//    delivery-point sensor recovers it.
Check criterion_distribution_network() {
    Check c;
    Sheaf s = concentration_sheaf(distribution_network(3));
    c.require(global_sections(s).dimension() == 1, "distribution network must have one section dimension");
    for (std::size_t i = 0; i < 3; ++i) {
        SensorPlacement sensor;
        sensor.measured[A("d" + std::to_string(i))] = RationalMatrix::identity(1);
        RecoverabilityReport r = recoverability(s, sensor);
        c.require(r.ambiguity_dimension == 0 && r.recoverable,
                  "delivery sensor " + std::to_string(i) + " must recover the network");
    }
    return c;
}

// 3. Collection network with an endpoint sensor: ambiguity dimension n-1,
//    confirmed independently by the induced-map kernel.
Check criterion_collection_network() {
    Check c;
    gen::Rng rng(9001);
    for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<Rational> rates;
        for (std::size_t i = 0; i < n; ++i) rates.push_back(rng.positive_rational(9, 5));
        Sheaf s = concentration_sheaf(collection_network(rates));
        SensorPlacement endpoint;
        endpoint.measured[A("out")] = RationalMatrix::identity(1);
        RecoverabilityReport r = recoverability(s, endpoint);
        c.require(r.ambiguity_dimension == n - 1,
                  "ambiguity dimension must be " + std::to_string(n - 1) + " for n=" + std::to_string(n));
        c.require(r.induced_kernel_dimension == n - 1,
                  "induced kernel must be " + std::to_string(n - 1) + " for n=" + std::to_string(n));
        c.require(!r.recoverable, "endpoint sensing must not recover n=" + std::to_string(n));
    }
    return c;
}

// 4. Sampling theorem on randomized instances: the two ambiguity dimensions
//    agree, and trivial ambiguity forces an injective induced matrix.
Check criterion_sampling_theorem() {
    Check c;
    gen::Rng rng(9002);
    for (int trial = 0; trial < 200; ++trial) {
        Sheaf s = gen::random_graph_sheaf(rng, gen::random_graph_complex(rng, 6), 3);
        Morphism m = gen::random_sampling(rng, s);
        std::size_t ambiguity = global_sections(kernel_sheaf(m).sheaf).dimension();
        RationalMatrix induced = induced_map(m).matrix;
        std::size_t induced_kernel = nullspace_basis(induced).size();
        c.require(ambiguity == induced_kernel, "ambiguity and induced kernel disagree on trial " +
                                                   std::to_string(trial));
        if (ambiguity == 0) {
            c.require(rank(induced) == induced.cols(),
                      "trivial ambiguity must force full column rank on trial " + std::to_string(trial));
        }
    }
    return c;
}

// 5. Filter encoding: the worked moving average is exact, and the encoding
//    agrees with the defining convolution sum on random instances.
Check criterion_filter_encoding() {
    Check c;
    std::vector<Rational> thirds{Rational(1, 3), Rational(1, 3), Rational(1, 3)};
    FilterEncoding avg = encode({thirds, 1}, {0, 1});
    std::vector<Rational> out = avg.apply(std::vector<Rational>{1, 1, 9, 2});
    c.require(out == std::vector<Rational>{Rational(11, 3), Rational(4)},
              "moving average on (1,1,9,2) must be exactly (11/3, 4)");

    gen::Rng rng(9003);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.pick(1, 5));
        std::size_t len = static_cast<std::size_t>(rng.pick(static_cast<long>(n), 12));
        FilterSpec spec;
        for (std::size_t i = 0; i < n; ++i) spec.taps.push_back(rng.rational(-9, 9, 4));
        std::vector<Rational> x;
        for (std::size_t i = 0; i < len; ++i) x.push_back(rng.rational(-9, 9, 4));

        FilterEncoding enc = encode(spec, {0, static_cast<std::int64_t>(len - n)});
        if (enc.apply(x) != convolve_oracle(spec.taps, x)) {
            c.require(false, "encoding and convolution disagree on trial " + std::to_string(trial));
            break;
        }
    }
    return c;
}

// 6. Register sheaf section counts across window sizes, tap counts, and
//    value dimensions, against the independent elimination oracle.
Check criterion_register_sections() {
    Check c;
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t t = 1; t <= 6; ++t) {
            for (std::size_t d = 1; d <= 2; ++d) {
                std::size_t got =
                    global_sections(grouping_sheaf(n, d, {0, static_cast<std::int64_t>(t) - 1})).dimension();
                std::size_t expected = d * (t + n - 1);
                std::size_t oracle = oracles::register_section_dim(n, d, t);
                c.require(got == expected && got == oracle,
                          "register sections N=" + std::to_string(n) + " T=" + std::to_string(t) +
                              " d=" + std::to_string(d) + ": got " + std::to_string(got) + ", formula " +
                              std::to_string(expected) + ", oracle " + std::to_string(oracle));
            }
        }
    }
    return c;
}

// 7. Axiom validation catches every single-entry perturbation over
//    triangle-bearing complexes, and induced maps compose functorially.
Check criterion_functoriality_suite() {
    Check c;
    gen::Rng rng(9004);

    std::size_t perturbations = 0, caught = 0;
    for (int trial = 0; trial < 12; ++trial) {
        SimplicialComplex base =
            (trial % 2 == 0)
                ? SimplicialComplex::from_maximal_faces({Face::of({Atom(1), Atom(2), Atom(3)})})
                : SimplicialComplex::from_maximal_faces(
                      {Face::of({Atom(1), Atom(2), Atom(3)}), Face::of({Atom(2), Atom(3), Atom(4)})});
        Sheaf s = gen::random_conjugated_sheaf(rng, base);
        if (!validate(s).empty()) {
            c.require(false, "generator produced an invalid sheaf");
            break;
        }
        for (const auto& [pair, matrix] : s.restrictions()) {
            for (std::size_t i = 0; i < matrix.rows(); ++i) {
                for (std::size_t j = 0; j < matrix.cols(); ++j) {
                    Sheaf broken = s;
                    RationalMatrix m = matrix;
                    m.at(i, j) += 1;
                    broken.set_restriction(pair.first, pair.second, m);
                    ++perturbations;
                    if (!validate(broken).empty()) ++caught;
                }
            }
        }
    }
    c.require(perturbations > 0 && caught == perturbations,
              "validation caught " + std::to_string(caught) + " of " + std::to_string(perturbations) +
                  " perturbations");

    for (int trial = 0; trial < 25; ++trial) {
        SimplicialComplex base = gen::random_graph_complex(rng);
        Sheaf a = gen::random_graph_sheaf(rng, base, 2);
        Sheaf b = gen::random_graph_sheaf(rng, base, 2);
        Morphism f = gen::sum_projection(gen::direct_sum(a, b), a);
        Morphism g = gen::random_conjugation(rng, a);
        RationalMatrix lhs = induced_map(compose(g, f)).matrix;
        RationalMatrix rhs = compose(induced_map(g).matrix, induced_map(f).matrix);
        if (lhs != rhs) {
            c.require(false, "induced maps failed to compose on trial " + std::to_string(trial));
            break;
        }
        Morphism ident = identity_morphism(a);
        InducedMap ind = induced_map(ident);
        if (ind.matrix != RationalMatrix::identity(ind.source_space.dimension())) {
            c.require(false, "identity morphism must induce the identity matrix");
            break;
        }
    }
    return c;
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Check()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "shift-register window consistency", 1.0, criterion_register_consistency},
        {2, "distribution network recoverable from one endpoint", 1.0, criterion_distribution_network},
        {3, "collection network ambiguity dimension n-1", 1.0, criterion_collection_network},
        {4, "sampling theorem on randomized instances", 30.0, criterion_sampling_theorem},
        {5, "filter encoding equals direct convolution", 10.0, criterion_filter_encoding},
        {6, "register section counts vs independent oracle", 10.0, criterion_register_sections},
        {7, "axiom perturbation catching and functoriality", 30.0, criterion_functoriality_suite},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = criterion.run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > criterion.budget_seconds) {
            result.ok = false;
            result.detail = "exceeded time budget of " + std::to_string(criterion.budget_seconds) + " s";
        }
        std::printf("[%s] criterion %d: %s (%.2f s)\n", result.ok ? "PASS" : "FAIL", criterion.id,
                    criterion.name, elapsed);
        if (!result.ok) {
            std::printf("       %s\n", result.detail.c_str());
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
