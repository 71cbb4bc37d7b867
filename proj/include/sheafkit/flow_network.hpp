#pragma once

#include <map>
#include <vector>

#include "sheafkit/morphism.hpp"

namespace sheafkit {

/// Directed network of pipes with strictly positive volume flow rates.
struct FlowNetwork {
    struct Pipe {
        Atom tail;
        Atom head;
        Rational rate;

        friend bool operator==(const Pipe& a, const Pipe& b) {
            return a.tail == b.tail && a.head == b.head && a.rate == b.rate;
        }
    };

    std::vector<Atom> vertices;
    std::vector<Pipe> edges;

    friend bool operator==(const FlowNetwork& a, const FlowNetwork& b) {
        return a.vertices == b.vertices && a.edges == b.edges;
    }
};

/// Structural checks: known endpoints, no self-loops, no parallel pipes on
/// one vertex pair, positive rates (NonpositiveRate), and exact rate balance
/// at every vertex that has both inflow and outflow (ConservationViolation).
void check_network(const FlowNetwork& net);

/// Indices into net.edges of the pipes into `vertex`, in slot order
/// (sorted by tail atom, then by position in the edge list). Slot i of the
/// vertex stalk belongs to the i-th entry.
std::vector<std::size_t> incoming_slots(const FlowNetwork& net, const Atom& vertex);

/// Compiles the network into the sheaf whose global sections are the
/// self-consistent concentration patterns: one slot per incoming pipe at
/// each vertex (a single inlet slot at in-degree-0 vertices), slot
/// projections toward incoming pipes, and the rate-weighted mixing row
/// toward every outgoing pipe.
Sheaf concentration_sheaf(const FlowNetwork& net);

/// Measurement maps out of vertex stalks; unlisted vertices measure nothing.
struct SensorPlacement {
    std::map<Atom, RationalMatrix> measured;
};

/// Morphism from `sheaf` onto the measurement sheaf that stores the sensor
/// codomains at vertices and zero everywhere else. Valid by construction.
/// Throws DimensionError on unknown vertices or column-count mismatches.
Morphism sampling_morphism(const Sheaf& sheaf, const SensorPlacement& placement);

struct RecoverabilityReport {
    bool recoverable = false;
    std::size_t ambiguity_dimension = 0;      // dim of sections invisible to the sensors
    std::size_t induced_kernel_dimension = 0; // independent cross-check via the induced map
    std::size_t section_dimension = 0;        // dim of the full section space
    std::vector<Section> unrecoverable_basis; // invisible sections, in source coordinates
};

/// Decides whether the sensor placement pins down every section of `sheaf`,
/// with the ambiguity dimension computed two independent ways.
RecoverabilityReport recoverability(const Sheaf& sheaf, const SensorPlacement& placement);

}  // namespace sheafkit
