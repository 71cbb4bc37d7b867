#include "sheafkit/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <utility>

#include "sheafkit/errors.hpp"

namespace sheafkit {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& message, const std::string& where) {
    throw ParseError(message, where);
}

const json& expect_object(const json& j, const std::string& where) {
    if (!j.is_object()) fail("expected an object", where);
    return j;
}

const json& expect_array(const json& j, const std::string& where) {
    if (!j.is_array()) fail("expected an array", where);
    return j;
}

const json& member(const json& j, const char* key, const std::string& where) {
    expect_object(j, where);
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing required key '") + key + "'", where);
    return *it;
}

std::size_t expect_count(const json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        fail("expected a nonnegative integer", where);
    }
    return j.get<std::size_t>();
}

std::string idx(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

std::string sub(const std::string& where, const std::string& key) { return where + "." + key; }

}  // namespace

json rational_to_json(const Rational& r) {
    if (r.is_integer() && r.num().fits_slong_p()) return json(static_cast<std::int64_t>(r.num().get_si()));
    return json(r.str());
}

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number()) fail("non-integer JSON numbers are inexact; write the value as a string", where);
    if (!j.is_string()) fail("expected a rational as an integer or a string", where);
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(e.what(), where);
    }
}

json matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    expect_array(j, where);
    if (j.size() != rows) {
        fail("expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()), where);
    }
    return matrix_from_json_rows(j, cols, where);
}

RationalMatrix matrix_from_json_rows(const json& j, std::size_t cols, const std::string& where) {
    expect_array(j, where);
    RationalMatrix m(j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r) {
        const json& row = j[r];
        expect_array(row, idx(where, r));
        if (row.size() != cols) {
            fail("expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()),
                 idx(where, r));
        }
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rational_from_json(row[c], idx(idx(where, r), c));
    }
    return m;
}

json atom_to_json(const Atom& a) {
    if (std::holds_alternative<std::int64_t>(a)) return json(std::get<std::int64_t>(a));
    return json(std::get<std::string>(a));
}

Atom atom_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Atom(j.get<std::int64_t>());
    if (!j.is_string()) fail("expected a vertex identifier (integer or string)", where);
    std::string token = j.get<std::string>();
    if (token.empty()) fail("vertex identifier must not be empty", where);
    if (token.find(',') != std::string::npos) fail("vertex identifier must not contain a comma", where);
    return make_atom(token);
}

json face_to_json(const Face& f) {
    json out = json::array();
    for (const Atom& a : f.atoms()) out.push_back(atom_to_json(a));
    return out;
}

Face face_from_json(const json& j, const std::string& where) {
    if (j.is_string()) return face_from_key(j.get<std::string>(), where);
    expect_array(j, where);
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < j.size(); ++i) atoms.push_back(atom_from_json(j[i], idx(where, i)));
    try {
        return Face::of(std::move(atoms));
    } catch (const std::invalid_argument& e) {
        fail(e.what(), where);
    }
}

Face face_from_key(const std::string& key, const std::string& where) {
    std::vector<Atom> atoms;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = key.find(',', start);
        std::string token = key.substr(start, comma == std::string::npos ? comma : comma - start);
        if (token.empty()) fail("malformed face key '" + key + "'", where);
        atoms.push_back(make_atom(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    try {
        return Face::of(std::move(atoms));
    } catch (const std::invalid_argument& e) {
        fail(e.what(), where);
    }
}

json complex_to_json(const SimplicialComplex& c) {
    json faces = json::array();
    for (const Face& f : c.faces()) faces.push_back(face_to_json(f));
    return json{{"faces", std::move(faces)}};
}

SimplicialComplex complex_from_json(const json& j, const std::string& where) {
    expect_object(j, where);
    bool maximal = j.contains("maximal");
    if (maximal == j.contains("faces")) fail("expected exactly one of 'faces' or 'maximal'", where);
    const char* key = maximal ? "maximal" : "faces";
    const json& list = member(j, key, where);
    std::string list_where = sub(where, key);
    expect_array(list, list_where);
    if (list.empty()) fail("a complex needs at least one face", list_where);

    std::vector<Face> faces;
    for (std::size_t i = 0; i < list.size(); ++i) faces.push_back(face_from_json(list[i], idx(list_where, i)));
    try {
        return maximal ? SimplicialComplex::from_maximal_faces(faces) : SimplicialComplex::from_faces(faces);
    } catch (const std::invalid_argument& e) {
        fail(e.what(), list_where);
    }
}

json sheaf_to_json(const Sheaf& s) {
    json stalks = json::object();
    for (const auto& [f, dim] : s.stalk_dims()) stalks[f.key()] = dim;

    json restrictions = json::array();
    for (const auto& [pair, matrix] : s.restrictions()) {
        restrictions.push_back(json{{"from", face_to_json(pair.first)},
                                    {"to", face_to_json(pair.second)},
                                    {"matrix", matrix_to_json(matrix)}});
    }
    return json{{"complex", complex_to_json(s.base())}, {"stalks", std::move(stalks)},
                {"restrictions", std::move(restrictions)}};
}

Sheaf sheaf_from_json(const json& j, const std::string& where) {
    SimplicialComplex base = complex_from_json(member(j, "complex", where), sub(where, "complex"));
    Sheaf s(base);

    const json& stalks = member(j, "stalks", where);
    std::string stalks_where = sub(where, "stalks");
    expect_object(stalks, stalks_where);
    for (const auto& [key, value] : stalks.items()) {
        Face f = face_from_key(key, stalks_where);
        if (!base.contains(f)) fail("stalk on unknown face '" + key + "'", stalks_where);
        s.set_stalk_dim(f, expect_count(value, sub(stalks_where, key)));
    }
    for (const Face& f : base.faces()) {
        if (!s.has_stalk_dim(f)) fail("missing stalk dimension for face '" + f.key() + "'", stalks_where);
    }

    if (j.contains("restrictions")) {
        const json& list = j.at("restrictions");
        std::string list_where = sub(where, "restrictions");
        expect_array(list, list_where);
        for (std::size_t i = 0; i < list.size(); ++i) {
            const json& entry = list[i];
            std::string entry_where = idx(list_where, i);
            Face from = face_from_json(member(entry, "from", entry_where), sub(entry_where, "from"));
            Face to = face_from_json(member(entry, "to", entry_where), sub(entry_where, "to"));
            if (!base.contains(from) || !base.contains(to)) fail("restriction on unknown faces", entry_where);
            if (!from.proper_subset_of(to)) {
                fail("'" + from.key() + "' is not a proper subset of '" + to.key() + "'", entry_where);
            }
            if (s.restriction(from, to)) fail("duplicate restriction entry", entry_where);
            s.set_restriction(from, to,
                              matrix_from_json(member(entry, "matrix", entry_where), s.stalk_dim(to),
                                               s.stalk_dim(from), sub(entry_where, "matrix")));
        }
    }
    return s;
}

json morphism_to_json(const Morphism& m) {
    json comps = json::object();
    for (const auto& [f, matrix] : m.component) comps[f.key()] = matrix_to_json(matrix);
    return json{{"source", sheaf_to_json(m.source)}, {"target", sheaf_to_json(m.target)},
                {"components", std::move(comps)}};
}

Morphism morphism_from_json(const json& j, const std::string& where) {
    Sheaf source = sheaf_from_json(member(j, "source", where), sub(where, "source"));
    Sheaf target = sheaf_from_json(member(j, "target", where), sub(where, "target"));
    if (source.base() != target.base()) fail("source and target live on different complexes", where);

    std::map<Face, RationalMatrix> comps;
    if (j.contains("components")) {
        const json& entries = j.at("components");
        std::string comps_where = sub(where, "components");
        expect_object(entries, comps_where);
        for (const auto& [key, value] : entries.items()) {
            Face f = face_from_key(key, comps_where);
            if (!source.base().contains(f)) fail("component on unknown face '" + key + "'", comps_where);
            comps[f] = matrix_from_json(value, target.stalk_dim(f), source.stalk_dim(f), sub(comps_where, key));
        }
    }
    try {
        return make_morphism(std::move(source), std::move(target), std::move(comps));
    } catch (const DimensionError& e) {
        fail(e.what(), where);
    }
}

json network_to_json(const NetworkFile& nf) {
    json vertices = json::array();
    for (const Atom& v : nf.network.vertices) vertices.push_back(atom_to_json(v));

    json edges = json::array();
    for (const auto& p : nf.network.edges) {
        edges.push_back(json{{"tail", atom_to_json(p.tail)},
                             {"head", atom_to_json(p.head)},
                             {"rate", rational_to_json(p.rate)}});
    }

    json sensors = json::object();
    for (const auto& [v, m] : nf.sensors.measured) sensors[atom_str(v)] = matrix_to_json(m);

    return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}, {"sensors", std::move(sensors)}};
}

NetworkFile network_from_json(const json& j, const std::string& where) {
    NetworkFile nf;

    const json& vertices = member(j, "vertices", where);
    std::string verts_where = sub(where, "vertices");
    expect_array(vertices, verts_where);
    if (vertices.empty()) fail("a network needs at least one vertex", verts_where);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        nf.network.vertices.push_back(atom_from_json(vertices[i], idx(verts_where, i)));
    }

    const json& edges = member(j, "edges", where);
    std::string edges_where = sub(where, "edges");
    expect_array(edges, edges_where);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const json& entry = edges[i];
        std::string entry_where = idx(edges_where, i);
        nf.network.edges.push_back(
            {atom_from_json(member(entry, "tail", entry_where), sub(entry_where, "tail")),
             atom_from_json(member(entry, "head", entry_where), sub(entry_where, "head")),
             rational_from_json(member(entry, "rate", entry_where), sub(entry_where, "rate"))});
    }

    try {
        check_network(nf.network);
    } catch (const std::exception& e) {
        fail(e.what(), sub(where, "edges"));
    }

    if (j.contains("sensors")) {
        const json& sensors = j.at("sensors");
        std::string sensors_where = sub(where, "sensors");
        expect_object(sensors, sensors_where);
        std::set<Atom> known(nf.network.vertices.begin(), nf.network.vertices.end());
        for (const auto& [key, value] : sensors.items()) {
            Atom v = make_atom(key);
            if (!known.count(v)) fail("sensor at unknown vertex '" + key + "'", sensors_where);
            std::size_t stalk = incoming_slots(nf.network, v).size();
            if (stalk == 0) stalk = 1;
            nf.sensors.measured[v] = matrix_from_json_rows(value, stalk, sub(sensors_where, key));
        }
    }
    return nf;
}

json section_to_json(const Section& s) {
    json out = json::object();
    for (const auto& [f, v] : s.values) {
        json values = json::array();
        for (const Rational& r : v) values.push_back(rational_to_json(r));
        out[f.key()] = std::move(values);
    }
    return out;
}

json encoding_to_json(const FilterEncoding& enc) {
    json taps = json::array();
    for (const Rational& t : enc.spec.taps) taps.push_back(rational_to_json(t));
    return json{{"taps", std::move(taps)},
                {"value_dim", enc.spec.value_dim},
                {"window", json{{"first", enc.window.first}, {"last", enc.window.last}}},
                {"s1", sheaf_to_json(enc.s1)},
                {"s2", sheaf_to_json(enc.s2)},
                {"s3", sheaf_to_json(enc.s3)},
                {"p", morphism_to_json(enc.p)},
                {"lambda", morphism_to_json(enc.lambda)}};
}

FilterEncoding encoding_from_json(const json& j, const std::string& where) {
    const json& taps = member(j, "taps", where);
    std::string taps_where = sub(where, "taps");
    expect_array(taps, taps_where);
    FilterSpec spec;
    for (std::size_t i = 0; i < taps.size(); ++i) {
        spec.taps.push_back(rational_from_json(taps[i], idx(taps_where, i)));
    }
    spec.value_dim = expect_count(member(j, "value_dim", where), sub(where, "value_dim"));

    const json& window = member(j, "window", where);
    std::string window_where = sub(where, "window");
    expect_object(window, window_where);
    const json& first = member(window, "first", window_where);
    const json& last = member(window, "last", window_where);
    if (!first.is_number_integer() || !last.is_number_integer()) fail("window bounds must be integers", window_where);

    FilterEncoding enc;
    try {
        enc = encode(spec, Window{first.get<std::int64_t>(), last.get<std::int64_t>()});
    } catch (const std::exception& e) {
        fail(e.what(), where);
    }

    if (sheaf_from_json(member(j, "s1", where), sub(where, "s1")) != enc.s1 ||
        sheaf_from_json(member(j, "s2", where), sub(where, "s2")) != enc.s2 ||
        sheaf_from_json(member(j, "s3", where), sub(where, "s3")) != enc.s3 ||
        morphism_from_json(member(j, "p", where), sub(where, "p")) != enc.p ||
        morphism_from_json(member(j, "lambda", where), sub(where, "lambda")) != enc.lambda) {
        fail("stored encoding disagrees with the taps/window it declares", where);
    }
    return enc;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'", "$");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), "$");
    }
}

}  // namespace sheafkit
