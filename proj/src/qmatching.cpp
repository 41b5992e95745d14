#include "tsurf/qmatching.hpp"

#include "tsurf/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace tsurf {

int quad_type_separating(int a, int b) {
    if (a == 0) return b - 1;
    if (b == 0) return a - 1;
    // 0 sits in the other part, paired with the remaining label
    return (6 - a - b) - 1;
}

int quad_edge_sign(int a, int b, int quad_type) {
    if (quad_type_separating(a, b) == quad_type) return 0;
    auto [c, d] = even_completion(a, b);
    if (quad_type_separating(a, c) == quad_type) return 1;
    if (quad_type_separating(a, d) == quad_type) return -1;
    return 0;
}

QMatrix build_q_matrix(const IdealTriangulation& T, const std::vector<EdgeClass>& edges) {
    QMatrix Q;
    Q.tet_count = T.tet_count;
    Q.mat = IMat(edges.size(), 3 * static_cast<size_t>(T.tet_count));
    for (const EdgeClass& e : edges)
        for (const EdgeIncidence& inc : e.incidences)
            for (int i = 0; i < quad_type_count; ++i)
                Q.mat(e.id, 3 * inc.tet + i) += quad_edge_sign(inc.x, inc.y, i);
    return Q;
}

Admissibility is_admissible(const QuadVector& x) {
    if (x.size() % 3 != 0) throw std::runtime_error("malformed document: quad vector length is not a multiple of three");
    Admissibility rep;
    for (size_t j = 0; j < x.size(); ++j)
        if (x[j] < 0) {
            std::ostringstream os;
            os << "negative entry at tetrahedron " << j / 3 << " type " << j % 3;
            rep.admissible = false;
            rep.violation = os.str();
            return rep;
        }
    for (size_t t = 0; t < x.size() / 3; ++t) {
        int nonzero = 0;
        for (int i = 0; i < 3; ++i)
            if (x[3 * t + i] != 0) ++nonzero;
        if (nonzero > 1) {
            std::ostringstream os;
            os << "multiple quad types at tetrahedron " << t;
            rep.admissible = false;
            rep.violation = os.str();
            return rep;
        }
    }
    return rep;
}

MatchingReport verify_q_matching(const QMatrix& Q, const QuadVector& x) {
    if (x.size() != Q.mat.cols)
        throw std::runtime_error("malformed document: quad vector length does not match the triangulation");
    MatchingReport rep;
    rep.residuals.assign(Q.mat.rows, Rat(0));
    for (size_t e = 0; e < Q.mat.rows; ++e) {
        Rat s = 0;
        for (size_t j = 0; j < Q.mat.cols; ++j)
            if (Q.mat(e, j) != 0) s += Rat(Q.mat(e, j)) * x[j];
        rep.residuals[e] = s;
        if (s != 0) rep.matches = false;
    }
    return rep;
}

QuadVector double_solution(const QuadVector& x) {
    QuadVector out(x.size());
    for (size_t j = 0; j < x.size(); ++j) out[j] = x[j] * 2;
    return out;
}

std::vector<Int> scale_to_primitive(const QuadVector& x) {
    bool nonzero = false;
    for (const Rat& v : x)
        if (v != 0) nonzero = true;
    if (!nonzero) throw std::runtime_error("cannot scale the zero vector");
    return primitive_integer_ray(x);
}

QuadVector parse_quad_vector(const std::string& text, int tet_count) {
    nlohmann::json doc = parse_json_document(text);
    if (!doc.is_array())
        throw std::runtime_error("malformed document: quad vector is not an array");
    if (static_cast<int>(doc.size()) != 3 * tet_count)
        throw std::runtime_error("malformed document: quad vector length does not match the triangulation");
    QuadVector x;
    x.reserve(doc.size());
    for (const auto& cell : doc) x.push_back(rat_from_json(cell));
    return x;
}

std::string emit_quad_vector(const QuadVector& x) {
    OrderedJson arr = OrderedJson::array();
    for (const Rat& v : x) arr.push_back(json_from_rat(v));
    return dump_json(arr);
}

std::string emit_q_matrix(const QMatrix& Q) {
    OrderedJson doc;
    doc["schema_version"] = "1";
    doc["rows"] = Q.mat.rows;
    doc["cols"] = Q.mat.cols;
    OrderedJson mat = OrderedJson::array();
    for (size_t e = 0; e < Q.mat.rows; ++e) {
        OrderedJson row = OrderedJson::array();
        for (size_t j = 0; j < Q.mat.cols; ++j) row.push_back(json_from_int(Q.mat(e, j)));
        mat.push_back(row);
    }
    doc["matrix"] = mat;
    OrderedJson row_edges = OrderedJson::array();
    for (size_t e = 0; e < Q.mat.rows; ++e) row_edges.push_back(e);
    doc["row_edges"] = row_edges;
    OrderedJson cols = OrderedJson::array();
    for (int t = 0; t < Q.tet_count; ++t)
        for (int i = 0; i < 3; ++i) {
            OrderedJson c;
            c["tet"] = t;
            c["type"] = i;
            cols.push_back(c);
        }
    doc["col_legend"] = cols;
    return dump_json(doc);
}

}  // namespace tsurf
