#pragma once

#include "tsurf/numeric.hpp"
#include "tsurf/permutation.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace tsurf {

/// Face f of a tetrahedron is the face opposite vertex f. A gluing at (t,f)
/// maps vertex labels of t to vertex labels of the neighbor; face f lands on
/// face perm[f] of the neighbor.
struct FaceGluing {
    int nbr = -1;
    Perm4 perm;
    bool glued() const { return nbr >= 0; }
};

struct IdealTriangulation {
    int tet_count = 0;
    std::vector<std::array<FaceGluing, 4>> gluings;

    bool operator==(const IdealTriangulation& o) const;
};

/// Parses and fully validates a triangulation document (see README for the
/// JSON schema). Throws std::runtime_error with a located message on any
/// structural or combinatorial defect.
IdealTriangulation parse_triangulation(const std::string& text);
std::string emit_triangulation(const IdealTriangulation& T);

/// Involutivity, odd parity, and completeness of the gluing table, plus
/// edge-walk sanity. Called by parse_triangulation; usable on hand-built
/// structures too.
void validate_triangulation(const IdealTriangulation& T);

/// Unordered vertex pairs {a,b} of {0..3}, indexed 0..5 lexicographically.
int pair_index(int a, int b);
std::pair<int, int> pair_vertices(int idx);

/// The unique (c,d) with (x,y,c,d) an even permutation of (0,1,2,3).
std::pair<int, int> even_completion(int x, int y);

/// One visit of the positive walk around an edge. The edge is oriented from
/// tail x to head y; (x,y,c,d) is even; the walk enters the tetrahedron
/// through face d and exits through face c (right-hand rule around x->y).
struct EdgeIncidence {
    int tet = 0;
    int x = 0, y = 0, c = 0, d = 0;
    bool operator==(const EdgeIncidence& o) const {
        return tet == o.tet && x == o.x && y == o.y && c == o.c && d == o.d;
    }
};

struct EdgeClass {
    int id = 0;
    std::vector<EdgeIncidence> incidences;
    int degree() const { return static_cast<int>(incidences.size()); }
};

/// Partitions all 6*tet_count (tet, vertex-pair) slots into cyclically
/// ordered orbits. Each cycle starts at the lexicographically lowest slot of
/// its orbit, oriented from its lower to its higher vertex label. Throws if
/// some edge is glued to itself in reverse.
std::vector<EdgeClass> compute_edge_classes(const IdealTriangulation& T);

struct SlotRef {
    int edge = -1;
    int pos = -1;
};

/// slot (tet, pair_index) -> (edge class, cycle position)
std::vector<std::array<SlotRef, 6>> build_slot_map(const IdealTriangulation& T,
                                                   const std::vector<EdgeClass>& edges);

// ---------------------------------------------------------------------------
// Cusp links
// ---------------------------------------------------------------------------

/// Link vertices are the ends of edge classes: end 0 is the head (y) end,
/// end 1 the tail (x) end. Around a head the positive rotation of the
/// boundary torus agrees with the walk order; around a tail it is reversed.
inline int link_vertex_id(int edge, int end) { return 2 * edge + end; }

struct LinkTriangle {
    int tet = 0;
    int vertex = 0;
};

/// A side of link triangle (tet,vertex) lying on face `face`; it joins the
/// triangle corners on tet edges {vertex,from_u} -> {vertex,to_u} in the
/// class's canonical direction.
struct LinkSideOccurrence {
    int tet = 0, vertex = 0, face = 0;
    int from_u = 0, to_u = 0;
};

struct LinkSideClass {
    int id = 0;
    int cusp = 0;
    int local_index = 0;
    LinkSideOccurrence occ[2];
    int tail_lv = 0, head_lv = 0;
};

struct CuspLink {
    int id = 0;
    std::vector<LinkTriangle> triangles;
    std::vector<int> sides;          // global side-class ids
    std::vector<int> link_vertices;  // sorted link vertex ids
    /// Two integer 1-cocycles generating first cohomology, over local side
    /// indices; curve classes are read off against these.
    std::vector<std::vector<Int>> cocycles;
    /// Two 1-cycles (alpha, beta) dual to the cocycles: <z_i, basis_j> = I.
    std::vector<std::vector<Int>> basis_cycles;

    int local_vertex_index(int lv) const;
};

struct LinkData {
    std::vector<CuspLink> cusps;
    std::vector<LinkSideClass> sides;
    std::vector<std::array<int, 4>> cusp_of_corner;            // [tet][v]
    std::vector<std::array<std::array<int, 4>, 4>> side_at;    // [tet][v][f], -1 if f==v
    std::vector<int> lv_cusp;                                  // link vertex -> cusp
    std::vector<std::array<SlotRef, 6>> slot_map;
    std::vector<EdgeClass> edges;  // copy kept for local lookups

    /// Link vertex at the corner of triangle (t,v) sitting on tet edge {v,u}.
    int link_vertex_of(int t, int v, int u) const;
};

/// One CuspLink per ideal-vertex orbit, each verified to be a torus
/// (connected, orientable, Euler characteristic zero), with the cohomology
/// cocycles and a dual homology basis attached. Throws "cusp link is not a
/// torus" otherwise.
LinkData compute_cusp_links(const IdealTriangulation& T, const std::vector<EdgeClass>& edges);

}  // namespace tsurf
