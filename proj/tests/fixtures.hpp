#pragma once

// Frozen gluing tables used across the test suite.
//
// fig8: the 2-tetrahedron ideal triangulation of the figure-eight knot
// complement, pinned by exhaustive search over all valid 2-tet tables: it is
// the lexicographically least table with two edge classes of degree 6, one
// torus cusp, and first homology Z (the only other signature in that census,
// Z + Z/5, is a different manifold).
//
// tet1_two_edges: a valid one-tetrahedron table with two edge classes of
// degree 3. Its vertex link is a sphere, so edge/walk code accepts it while
// cusp-link construction must reject it.
//
// tri3..tri8: random connected tables (fixed seeds) with all-torus cusps.
// tri4_cusp2/tri5_cusp2/tri6_cusp2 have two cusps each.

namespace fixtures {

inline const char* fig8 = R"({"tets":2,"gluings":[[[1,[0,1,3,2]],[1,[1,2,3,0]],[1,[2,3,1,0]],[1,[2,1,0,3]]],[[0,[0,1,3,2]],[0,[3,2,0,1]],[0,[3,0,1,2]],[0,[2,1,0,3]]]]})";

inline const char* tet1_two_edges = R"({"tets":1,"gluings":[[[0,[1,2,3,0]],[0,[3,0,1,2]],[0,[2,0,3,1]],[0,[1,3,0,2]]]]})";

inline const char* tri3 = R"({"tets":3,"gluings":[[[1,[0,2,1,3]],[0,[3,2,0,1]],[0,[2,3,1,0]],[2,[1,2,3,0]]],[[0,[0,2,1,3]],[2,[3,1,2,0]],[1,[0,1,3,2]],[1,[0,1,3,2]]],[[0,[3,0,1,2]],[1,[3,1,2,0]],[2,[0,1,3,2]],[2,[0,1,3,2]]]]})";

inline const char* tri4 = R"({"tets":4,"gluings":[[[2,[1,0,2,3]],[3,[1,3,0,2]],[0,[0,1,3,2]],[0,[0,1,3,2]]],[[1,[3,2,0,1]],[2,[1,3,0,2]],[3,[3,2,0,1]],[1,[2,3,1,0]]],[[3,[2,3,1,0]],[0,[1,0,2,3]],[3,[0,2,1,3]],[1,[2,0,3,1]]],[[1,[2,3,1,0]],[2,[0,2,1,3]],[2,[3,2,0,1]],[0,[2,0,3,1]]]]})";

inline const char* tri5 = R"({"tets":5,"gluings":[[[3,[0,1,3,2]],[3,[2,1,0,3]],[3,[1,2,3,0]],[1,[2,0,3,1]]],[[1,[3,1,2,0]],[0,[1,3,0,2]],[4,[2,1,0,3]],[1,[3,1,2,0]]],[[4,[3,1,2,0]],[3,[3,2,0,1]],[4,[3,0,1,2]],[4,[1,3,0,2]]],[[0,[0,1,3,2]],[0,[2,1,0,3]],[2,[2,3,1,0]],[0,[3,0,1,2]]],[[1,[2,1,0,3]],[2,[1,2,3,0]],[2,[2,0,3,1]],[2,[3,1,2,0]]]]})";

inline const char* tri6 = R"({"tets":6,"gluings":[[[1,[1,0,2,3]],[1,[0,3,2,1]],[1,[3,1,2,0]],[3,[0,1,3,2]]],[[2,[3,1,2,0]],[0,[1,0,2,3]],[0,[3,1,2,0]],[0,[0,3,2,1]]],[[4,[2,1,0,3]],[5,[1,2,3,0]],[3,[1,3,0,2]],[1,[3,1,2,0]]],[[2,[2,0,3,1]],[3,[0,3,2,1]],[0,[0,1,3,2]],[3,[0,3,2,1]]],[[5,[0,1,3,2]],[5,[0,1,3,2]],[2,[2,1,0,3]],[5,[2,1,0,3]]],[[4,[0,1,3,2]],[4,[0,1,3,2]],[2,[3,0,1,2]],[4,[2,1,0,3]]]]})";

inline const char* tri8 = R"({"tets":8,"gluings":[[[0,[2,1,0,3]],[3,[2,0,3,1]],[0,[2,1,0,3]],[5,[3,2,0,1]]],[[1,[2,3,1,0]],[5,[1,3,0,2]],[1,[3,2,0,1]],[2,[1,0,2,3]]],[[3,[3,2,0,1]],[4,[1,3,0,2]],[6,[1,0,2,3]],[1,[1,0,2,3]]],[[0,[1,3,0,2]],[5,[3,2,0,1]],[7,[2,1,0,3]],[2,[2,3,1,0]]],[[7,[3,0,1,2]],[6,[1,0,2,3]],[7,[3,0,1,2]],[2,[2,0,3,1]]],[[7,[2,0,3,1]],[0,[2,3,1,0]],[3,[2,3,1,0]],[1,[2,0,3,1]]],[[4,[1,0,2,3]],[6,[0,3,2,1]],[2,[1,0,2,3]],[6,[0,3,2,1]]],[[3,[2,1,0,3]],[4,[1,2,3,0]],[5,[1,3,0,2]],[4,[1,2,3,0]]]]})";

inline const char* tri4_cusp2 = R"({"tets":4,"gluings":[[[1,[1,2,3,0]],[0,[0,2,1,3]],[0,[0,2,1,3]],[3,[2,1,0,3]]],[[2,[2,1,0,3]],[0,[3,0,1,2]],[2,[0,1,3,2]],[2,[3,1,2,0]]],[[1,[3,1,2,0]],[3,[2,1,0,3]],[1,[2,1,0,3]],[1,[0,1,3,2]]],[[3,[2,0,3,1]],[2,[2,1,0,3]],[3,[1,3,0,2]],[0,[2,1,0,3]]]]})";

inline const char* tri5_cusp2 = R"({"tets":5,"gluings":[[[1,[1,2,3,0]],[4,[2,3,1,0]],[2,[3,1,2,0]],[4,[2,3,1,0]]],[[2,[0,2,1,3]],[0,[3,0,1,2]],[2,[0,2,1,3]],[3,[0,3,2,1]]],[[1,[0,2,1,3]],[1,[0,2,1,3]],[0,[3,1,2,0]],[4,[0,3,2,1]]],[[3,[3,1,2,0]],[1,[0,3,2,1]],[4,[0,3,2,1]],[3,[3,1,2,0]]],[[0,[3,2,0,1]],[2,[0,3,2,1]],[3,[0,3,2,1]],[0,[3,2,0,1]]]]})";

inline const char* tri6_cusp2 = R"({"tets":6,"gluings":[[[0,[3,1,2,0]],[2,[2,1,0,3]],[3,[0,3,2,1]],[0,[3,1,2,0]]],[[4,[1,2,3,0]],[4,[2,3,1,0]],[4,[3,1,2,0]],[2,[1,3,0,2]]],[[3,[3,0,1,2]],[0,[2,1,0,3]],[1,[2,0,3,1]],[5,[2,1,0,3]]],[[5,[2,1,0,3]],[5,[2,0,3,1]],[0,[0,3,2,1]],[2,[1,2,3,0]]],[[5,[1,3,0,2]],[1,[3,0,1,2]],[1,[3,1,2,0]],[1,[3,2,0,1]]],[[3,[1,3,0,2]],[4,[2,0,3,1]],[3,[2,1,0,3]],[2,[2,1,0,3]]]]})";

// Error-path documents.

// Face (0,1) glues to (1,2), but (1,2) glues back to (0,3).
inline const char* err_non_involutive = R"({"tets":2,"gluings":[[[1,[0,1,3,2]],[1,[0,2,1,3]],[1,[0,2,1,3]],[1,[1,0,2,3]]],[[0,[0,1,3,2]],[0,[0,2,1,3]],[0,[0,1,3,2]],[0,[1,0,2,3]]]]})";

inline const char* err_even_perm = R"({"tets":1,"gluings":[[[0,[1,0,3,2]],[0,[1,0,3,2]],[0,[0,1,3,2]],[0,[0,1,3,2]]]]})";

inline const char* err_unglued = R"({"tets":1,"gluings":[[[0,[1,0,2,3]],[0,[1,0,2,3]],null,null]]})";

// Face glued to itself by a transposition: folds the adjacent edge onto
// itself in reverse.
inline const char* err_self_reverse = R"({"tets":1,"gluings":[[[0,[0,2,1,3]],[0,[0,2,1,3]],[0,[0,2,1,3]],[0,[0,2,1,3]]]]})";

inline const char* err_bad_perm = R"({"tets":1,"gluings":[[[0,[0,0,1,2]],null,null,null]]})";

}  // namespace fixtures
