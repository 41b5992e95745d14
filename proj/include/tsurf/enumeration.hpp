#pragma once

#include "tsurf/qmatching.hpp"

#include <vector>

namespace tsurf {

/// Per-tetrahedron quad selection: -1 for no quad, otherwise a type in
/// {0,1,2}. Admissible vectors are exactly those supported inside some
/// pattern.
using SupportPattern = std::vector<int>;

struct VertexSolution {
    QuadVector projective;      // coordinate sum one
    std::vector<Int> primitive; // smallest positive integer multiple
    SupportPattern support;     // derived from the nonzero entries
};

/// Extreme rays of {x >= 0, support(x) inside pattern, Qx = 0}, as primitive
/// integer vectors sorted lexicographically. Exhaustive facet intersection:
/// a ray is cut out by a column subset on which Q has nullity one and whose
/// kernel generator is sign-definite.
std::vector<std::vector<Int>> extreme_rays(const SupportPattern& pattern, const QMatrix& Q);

/// All vertices of the projective admissible solution space: the union of
/// extreme rays over every support pattern, deduplicated, zero excluded,
/// sorted lexicographically by primitive vector.
std::vector<VertexSolution> enumerate_admissible_vertices(const IdealTriangulation& T,
                                                          const QMatrix& Q);

std::string emit_vertex_solutions(const std::vector<VertexSolution>& vs);

}  // namespace tsurf
