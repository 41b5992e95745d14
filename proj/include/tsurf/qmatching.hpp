#pragma once

#include "tsurf/exact_linalg.hpp"
#include "tsurf/numeric.hpp"
#include "tsurf/triangulation.hpp"

#include <string>
#include <vector>

namespace tsurf {

/// Quad type i in a tetrahedron is the quadrilateral separating the vertex
/// pair {0,i+1} from the complementary pair.
inline constexpr int quad_type_count = 3;

/// Partition type of the quad through vertex pairs {0,p}|{rest}: the type
/// whose parts contain {a,b} together is parallel to edge {a,b}.
int quad_type_separating(int a, int b);

/// Sign of quad type i crossing edge {a,b}: 0 when parallel; otherwise with
/// (a,b,c,d) even, the type separating {a,c}|{b,d} gives +1 (a 0-edge) and
/// the type separating {a,d}|{b,c} gives -1 (an infinity-edge).
int quad_edge_sign(int a, int b, int quad_type);

struct QMatrix {
    int tet_count = 0;
    IMat mat;  // rows: edge classes; columns: 3*tet + type
};

QMatrix build_q_matrix(const IdealTriangulation& T, const std::vector<EdgeClass>& edges);

using QuadVector = std::vector<Rat>;

struct Admissibility {
    bool admissible = true;
    std::string violation;
};

/// Nonnegative entries and at most one nonzero quad type per tetrahedron.
Admissibility is_admissible(const QuadVector& x);

struct MatchingReport {
    bool matches = true;
    std::vector<Rat> residuals;  // one per edge class
};

MatchingReport verify_q_matching(const QMatrix& Q, const QuadVector& x);

QuadVector double_solution(const QuadVector& x);

/// Smallest positive integer multiple of a nonzero rational vector.
std::vector<Int> scale_to_primitive(const QuadVector& x);

/// JSON: flat array of length 3*tet_count, integers or "p/q" strings.
QuadVector parse_quad_vector(const std::string& text, int tet_count);
std::string emit_quad_vector(const QuadVector& x);
std::string emit_q_matrix(const QMatrix& Q);

}  // namespace tsurf
