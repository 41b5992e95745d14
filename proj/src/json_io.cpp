#include "tsurf/json_io.hpp"

#include "tsurf/triangulation.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace tsurf {

nlohmann::json parse_json_document(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("malformed document: ") + e.what());
    }
}

std::string dump_json(const OrderedJson& j) { return j.dump(2) + "\n"; }

static bool fits_int64(const Int& n) {
    return n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max();
}

OrderedJson json_from_int(const Int& n) {
    if (fits_int64(n)) return static_cast<long long>(n);
    return int_to_string(n);
}

OrderedJson json_from_rat(const Rat& r) {
    if (denominator(r) == 1) return json_from_int(numerator(r));
    return rat_to_string(r);
}

Rat rat_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::runtime_error("malformed document: expected integer or rational string");
}

IdealTriangulation parse_triangulation(const std::string& text) {
    nlohmann::json doc = parse_json_document(text);
    if (!doc.is_object()) throw std::runtime_error("malformed document: top level is not an object");
    if (!doc.contains("tets") || !doc["tets"].is_number_integer())
        throw std::runtime_error("malformed document: missing integer field \"tets\"");
    if (!doc.contains("gluings") || !doc["gluings"].is_array())
        throw std::runtime_error("malformed document: missing array field \"gluings\"");

    IdealTriangulation T;
    long long tets = doc["tets"].get<long long>();
    if (tets < 1 || tets > 100000) throw std::runtime_error("malformed document: tetrahedron count out of range");
    T.tet_count = static_cast<int>(tets);

    const nlohmann::json& rows = doc["gluings"];
    if (static_cast<long long>(rows.size()) != tets)
        throw std::runtime_error("malformed document: gluing table size mismatch");

    T.gluings.resize(T.tet_count);
    for (int t = 0; t < T.tet_count; ++t) {
        const nlohmann::json& row = rows[t];
        if (!row.is_array() || row.size() != 4)
            throw std::runtime_error("malformed document: tetrahedron row is not an array of four faces");
        for (int f = 0; f < 4; ++f) {
            const nlohmann::json& cell = row[f];
            if (cell.is_null()) continue;  // left unglued; validation reports it
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer() ||
                !cell[1].is_array() || cell[1].size() != 4)
                throw std::runtime_error("malformed document: face entry is not [neighbor, permutation]");
            FaceGluing g;
            long long nbr = cell[0].get<long long>();
            if (nbr < 0 || nbr >= tets)
                throw std::runtime_error("malformed document: neighbor index out of range");
            g.nbr = static_cast<int>(nbr);
            for (int i = 0; i < 4; ++i) {
                if (!cell[1][i].is_number_integer())
                    throw std::runtime_error("malformed document: permutation entry is not an integer");
                long long v = cell[1][i].get<long long>();
                if (v < 0 || v > 3)
                    throw std::runtime_error("malformed document: permutation entry out of range");
                g.perm.img[i] = static_cast<int>(v);
            }
            T.gluings[t][f] = g;
        }
    }

    validate_triangulation(T);
    return T;
}

std::string emit_triangulation(const IdealTriangulation& T) {
    OrderedJson doc;
    doc["tets"] = T.tet_count;
    OrderedJson rows = OrderedJson::array();
    for (int t = 0; t < T.tet_count; ++t) {
        OrderedJson row = OrderedJson::array();
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = T.gluings[t][f];
            if (!g.glued()) {
                row.push_back(nullptr);
                continue;
            }
            OrderedJson perm = OrderedJson::array();
            for (int i = 0; i < 4; ++i) perm.push_back(g.perm.img[i]);
            row.push_back(OrderedJson::array({g.nbr, perm}));
        }
        rows.push_back(row);
    }
    doc["gluings"] = rows;
    return dump_json(doc);
}

}  // namespace tsurf
