#pragma once

#include <json.hpp>

#include <string>

#include "sheafkit/fir.hpp"
#include "sheafkit/flow_network.hpp"

namespace sheafkit {

/// JSON interchange for every sheafkit structure. Parsers throw ParseError
/// with a JSON-pointer-like location; serializers are deterministic
/// (canonical face order, alphabetical keys).
///
/// Rationals are emitted as JSON integers when they are integers that fit
/// in 64 bits and as strings "p/q" otherwise. On input, JSON integers and
/// strings ("p/q", "-12", exact decimals like "2.7") are accepted;
/// non-integer JSON numbers are rejected because binary floating point
/// cannot express them exactly.
nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json matrix_to_json(const RationalMatrix& m);
/// Parses a matrix of known shape; the row count must match exactly.
RationalMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols,
                                const std::string& where);
/// Parses a matrix whose row count is free but whose width is fixed.
RationalMatrix matrix_from_json_rows(const nlohmann::json& j, std::size_t cols, const std::string& where);

nlohmann::json atom_to_json(const Atom& a);
Atom atom_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json face_to_json(const Face& f);
/// Accepts either an array of atoms or a comma-joined key string.
Face face_from_json(const nlohmann::json& j, const std::string& where);
Face face_from_key(const std::string& key, const std::string& where);

/// {"faces": [...]} (validated for downward closure) or {"maximal": [...]}.
nlohmann::json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const nlohmann::json& j, const std::string& where = "$");

/// {"complex": ..., "stalks": {"face-key": dim, ...},
///  "restrictions": [{"from": ..., "to": ..., "matrix": [[...]]}]}.
/// Every face needs a stalk entry; restriction matrices must match the
/// stalk shapes. Missing restrictions are allowed here and reported by
/// validate().
nlohmann::json sheaf_to_json(const Sheaf& s);
Sheaf sheaf_from_json(const nlohmann::json& j, const std::string& where = "$");

/// {"source": sheaf, "target": sheaf, "components": {"face-key": [[...]]}};
/// omitted face keys default to zero maps.
nlohmann::json morphism_to_json(const Morphism& m);
Morphism morphism_from_json(const nlohmann::json& j, const std::string& where = "$");

struct NetworkFile {
    FlowNetwork network;
    SensorPlacement sensors;

    friend bool operator==(const NetworkFile& a, const NetworkFile& b) {
        return a.network == b.network && a.sensors.measured == b.sensors.measured;
    }
};

/// {"vertices": [...], "edges": [{"tail": v, "head": w, "rate": "3/2"}],
///  "sensors": {"v": [[...]]}} — sensors optional; each sensor matrix must
/// be as wide as the vertex's concentration stalk.
nlohmann::json network_to_json(const NetworkFile& nf);
NetworkFile network_from_json(const nlohmann::json& j, const std::string& where = "$");

nlohmann::json section_to_json(const Section& s);

/// Filter encodings round-trip through their taps, value dimension, and
/// window; the embedded sheaves and morphisms are checked against a rebuild.
nlohmann::json encoding_to_json(const FilterEncoding& enc);
FilterEncoding encoding_from_json(const nlohmann::json& j, const std::string& where = "$");

/// Reads and parses a file; throws ParseError on IO or JSON syntax errors.
nlohmann::json load_json_file(const std::string& path);

}  // namespace sheafkit
