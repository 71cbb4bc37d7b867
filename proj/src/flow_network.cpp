#include "sheafkit/flow_network.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "sheafkit/errors.hpp"

namespace sheafkit {

void check_network(const FlowNetwork& net) {
    std::set<Atom> known(net.vertices.begin(), net.vertices.end());
    if (known.size() != net.vertices.size()) throw DimensionError("duplicate vertex in network");

    std::set<std::pair<Atom, Atom>> seen;
    for (const auto& p : net.edges) {
        if (!known.count(p.tail) || !known.count(p.head)) {
            throw DimensionError("pipe endpoint is not a listed vertex: " + atom_str(p.tail) + " -> " +
                                 atom_str(p.head));
        }
        if (p.tail == p.head) throw DimensionError("self-loop pipe at " + atom_str(p.tail));
        if (!(p.rate > Rational(0))) {
            throw NonpositiveRate("pipe " + atom_str(p.tail) + " -> " + atom_str(p.head) + " has rate " +
                                  p.rate.str());
        }
        auto undirected = std::minmax(p.tail, p.head);
        if (!seen.insert({undirected.first, undirected.second}).second) {
            throw DimensionError("parallel pipes between " + atom_str(p.tail) + " and " + atom_str(p.head));
        }
    }

    for (const Atom& v : net.vertices) {
        Rational in_total, out_total;
        std::size_t in_count = 0, out_count = 0;
        for (const auto& p : net.edges) {
            if (p.head == v) {
                in_total += p.rate;
                ++in_count;
            }
            if (p.tail == v) {
                out_total += p.rate;
                ++out_count;
            }
        }
        if (in_count > 0 && out_count > 0 && in_total != out_total) {
            throw ConservationViolation("vertex " + atom_str(v) + " takes in " + in_total.str() +
                                        " but sends out " + out_total.str());
        }
    }
}

std::vector<std::size_t> incoming_slots(const FlowNetwork& net, const Atom& vertex) {
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < net.edges.size(); ++i) {
        if (net.edges[i].head == vertex) slots.push_back(i);
    }
    std::sort(slots.begin(), slots.end(), [&](std::size_t a, std::size_t b) {
        if (net.edges[a].tail != net.edges[b].tail) return net.edges[a].tail < net.edges[b].tail;
        return a < b;
    });
    return slots;
}

Sheaf concentration_sheaf(const FlowNetwork& net) {
    check_network(net);

    std::vector<Face> faces;
    for (const Atom& v : net.vertices) faces.push_back(Face::vertex(v));
    for (const auto& p : net.edges) faces.push_back(Face::edge(p.tail, p.head));

    Sheaf s(SimplicialComplex::from_faces(faces));
    for (const auto& p : net.edges) s.set_stalk_dim(Face::edge(p.tail, p.head), 1);

    for (const Atom& v : net.vertices) {
        auto incoming = incoming_slots(net, v);
        std::size_t dim = incoming.empty() ? 1 : incoming.size();
        Face vf = Face::vertex(v);
        s.set_stalk_dim(vf, dim);

        for (std::size_t slot = 0; slot < incoming.size(); ++slot) {
            const auto& p = net.edges[incoming[slot]];
            RationalMatrix pick(1, dim);
            pick.at(0, slot) = 1;
            s.set_restriction(vf, Face::edge(p.tail, p.head), std::move(pick));
        }

        RationalMatrix mix(1, dim);
        if (incoming.empty()) {
            mix.at(0, 0) = 1;  // an inlet carries its own concentration outward
        } else {
            Rational total;
            for (std::size_t slot : incoming) total += net.edges[slot].rate;
            for (std::size_t slot = 0; slot < incoming.size(); ++slot) {
                mix.at(0, slot) = net.edges[incoming[slot]].rate / total;
            }
        }
        for (const auto& p : net.edges) {
            if (p.tail == v) s.set_restriction(vf, Face::edge(p.tail, p.head), mix);
        }
    }
    return s;
}

Morphism sampling_morphism(const Sheaf& sheaf, const SensorPlacement& placement) {
    require_valid(sheaf);

    for (const auto& [vertex, matrix] : placement.measured) {
        Face vf = Face::vertex(vertex);
        if (!sheaf.base().contains(vf)) {
            throw DimensionError("sensor at unknown vertex " + atom_str(vertex));
        }
        if (matrix.cols() != sheaf.stalk_dim(vf)) {
            throw DimensionError("sensor at " + atom_str(vertex) + " reads " + std::to_string(matrix.cols()) +
                                 " slots, stalk has " + std::to_string(sheaf.stalk_dim(vf)));
        }
    }

    Sheaf measurement(sheaf.base());
    for (const Face& f : sheaf.base().faces()) {
        std::size_t dim = 0;
        if (f.dimension() == 0) {
            auto it = placement.measured.find(f.atoms().front());
            if (it != placement.measured.end()) dim = it->second.rows();
        }
        measurement.set_stalk_dim(f, dim);
    }
    for (const auto& [a, b] : sheaf.base().inclusions()) {
        measurement.set_restriction(a, b, RationalMatrix(measurement.stalk_dim(b), measurement.stalk_dim(a)));
    }

    std::map<Face, RationalMatrix> comps;
    for (const auto& [vertex, matrix] : placement.measured) comps[Face::vertex(vertex)] = matrix;
    return make_morphism(sheaf, std::move(measurement), std::move(comps));
}

RecoverabilityReport recoverability(const Sheaf& sheaf, const SensorPlacement& placement) {
    Morphism sampling = sampling_morphism(sheaf, placement);

    KernelSheaf ambiguity = kernel_sheaf(sampling);
    SectionSpace invisible = global_sections(ambiguity.sheaf);

    RecoverabilityReport report;
    report.ambiguity_dimension = invisible.dimension();
    report.recoverable = report.ambiguity_dimension == 0;
    report.induced_kernel_dimension = kernel_of_induced(sampling).dimension();
    report.section_dimension = global_sections(sheaf).dimension();

    for (const Section& a : invisible.basis) {
        Section pattern;
        for (const Face& f : sheaf.base().faces()) {
            pattern.values[f] = ambiguity.embedding.component.at(f) * a.at(f);
        }
        report.unrecoverable_basis.push_back(std::move(pattern));
    }
    return report;
}

}  // namespace sheafkit
