#include "tsurf/triangulation.hpp"

#include "tsurf/exact_linalg.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tsurf {

bool IdealTriangulation::operator==(const IdealTriangulation& o) const {
    if (tet_count != o.tet_count) return false;
    for (int t = 0; t < tet_count; ++t)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& a = gluings[t][f];
            const FaceGluing& b = o.gluings[t][f];
            if (a.nbr != b.nbr || !(a.perm == b.perm)) return false;
        }
    return true;
}

int pair_index(int a, int b) {
    if (a > b) std::swap(a, b);
    static const int table[4][4] = {
        {-1, 0, 1, 2},
        {0, -1, 3, 4},
        {1, 3, -1, 5},
        {2, 4, 5, -1},
    };
    int r = table[a][b];
    assert(r >= 0);
    return r;
}

std::pair<int, int> pair_vertices(int idx) {
    static const std::pair<int, int> table[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    return table[idx];
}

std::pair<int, int> even_completion(int x, int y) {
    int rest[2];
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != x && v != y) rest[k++] = v;
    Perm4 p{{x, y, rest[0], rest[1]}};
    if (p.is_even()) return {rest[0], rest[1]};
    return {rest[1], rest[0]};
}

static std::string at_face(int t, int f) {
    std::ostringstream os;
    os << "(" << t << "," << f << ")";
    return os.str();
}

void validate_triangulation(const IdealTriangulation& T) {
    if (T.tet_count <= 0) throw std::runtime_error("malformed document: no tetrahedra");
    if (static_cast<int>(T.gluings.size()) != T.tet_count)
        throw std::runtime_error("malformed document: gluing table size mismatch");

    for (int t = 0; t < T.tet_count; ++t)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = T.gluings[t][f];
            if (!g.glued()) throw std::runtime_error("unglued face at " + at_face(t, f));
            if (g.nbr >= T.tet_count)
                throw std::runtime_error("malformed document: neighbor out of range at " + at_face(t, f));
            if (!g.perm.is_valid())
                throw std::runtime_error("malformed document: invalid permutation at " + at_face(t, f));
        }

    for (int t = 0; t < T.tet_count; ++t)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = T.gluings[t][f];
            if (g.perm.is_even())
                throw std::runtime_error("even gluing permutation at " + at_face(t, f));
        }

    for (int t = 0; t < T.tet_count; ++t)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = T.gluings[t][f];
            int t2 = g.nbr;
            int f2 = g.perm[f];
            const FaceGluing& h = T.gluings[t2][f2];
            if (h.nbr != t || !(h.perm == g.perm.inverse()))
                throw std::runtime_error("non-involutive gluing at " + at_face(t2, f2));
        }

    compute_edge_classes(T);
}

std::vector<EdgeClass> compute_edge_classes(const IdealTriangulation& T) {
    std::vector<EdgeClass> classes;
    std::vector<std::array<bool, 6>> seen(T.tet_count, {false, false, false, false, false, false});

    for (int t0 = 0; t0 < T.tet_count; ++t0)
        for (int pi = 0; pi < 6; ++pi) {
            if (seen[t0][pi]) continue;
            auto [x0, y0] = pair_vertices(pi);
            auto [c0, d0] = even_completion(x0, y0);

            EdgeClass cls;
            cls.id = static_cast<int>(classes.size());

            int t = t0, x = x0, y = y0, c = c0, d = d0;
            while (true) {
                if (t == t0 && x == y0 && y == x0) {
                    std::ostringstream os;
                    os << "edge glued to itself in reverse at tetrahedron " << t0 << " edge {"
                       << x0 << "," << y0 << "}";
                    throw std::runtime_error(os.str());
                }
                int slot = pair_index(x, y);
                assert(!seen[t][slot]);
                seen[t][slot] = true;
                cls.incidences.push_back({t, x, y, c, d});

                const FaceGluing& g = T.gluings[t][c];
                int nt = g.nbr;
                int nx = g.perm[x], ny = g.perm[y], nc = g.perm[d], nd = g.perm[c];
                t = nt;
                x = nx;
                y = ny;
                c = nc;
                d = nd;
                if (t == t0 && x == x0 && y == y0) {
                    assert(c == c0 && d == d0);
                    break;
                }
            }
            classes.push_back(std::move(cls));
        }
    return classes;
}

std::vector<std::array<SlotRef, 6>> build_slot_map(const IdealTriangulation& T,
                                                   const std::vector<EdgeClass>& edges) {
    std::vector<std::array<SlotRef, 6>> map(T.tet_count);
    for (const EdgeClass& e : edges)
        for (int j = 0; j < e.degree(); ++j) {
            const EdgeIncidence& inc = e.incidences[j];
            SlotRef& ref = map[inc.tet][pair_index(inc.x, inc.y)];
            assert(ref.edge == -1);
            ref = {e.id, j};
        }
    return map;
}

int CuspLink::local_vertex_index(int lv) const {
    auto it = std::lower_bound(link_vertices.begin(), link_vertices.end(), lv);
    assert(it != link_vertices.end() && *it == lv);
    return static_cast<int>(it - link_vertices.begin());
}

int LinkData::link_vertex_of(int t, int v, int u) const {
    const SlotRef& ref = slot_map[t][pair_index(v, u)];
    const EdgeIncidence& inc = edges[ref.edge].incidences[ref.pos];
    return link_vertex_id(ref.edge, inc.y == v ? 0 : 1);
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

void link_homology(CuspLink& cusp, const LinkData& data) {
    const int nV = static_cast<int>(cusp.link_vertices.size());
    const int nE = static_cast<int>(cusp.sides.size());
    const int nF = static_cast<int>(cusp.triangles.size());

    IMat d2(nE, nF);  // boundary of triangles in sides
    for (int j = 0; j < nF; ++j) {
        const LinkTriangle& tri = cusp.triangles[j];
        int t = tri.tet, v = tri.vertex;
        int us[3];
        int k = 0;
        for (int u = 0; u < 4; ++u)
            if (u != v) us[k++] = u;
        int o[3] = {us[0], us[1], us[2]};
        Perm4 arr{{o[0], o[1], o[2], v}};
        if (!arr.is_even()) std::swap(o[1], o[2]);
        for (int s = 0; s < 3; ++s) {
            int a = o[s], b = o[(s + 1) % 3];
            int f = o[(s + 2) % 3];
            int gid = data.side_at[t][v][f];
            const LinkSideClass& sc = data.sides[gid];
            int sign = 0;
            for (const LinkSideOccurrence& occ : sc.occ)
                if (occ.tet == t && occ.vertex == v && occ.face == f) {
                    if (occ.from_u == a && occ.to_u == b)
                        sign = 1;
                    else {
                        assert(occ.from_u == b && occ.to_u == a);
                        sign = -1;
                    }
                    break;
                }
            assert(sign != 0);
            d2(sc.local_index, j) += sign;
        }
    }

    // Orientability of the link: every side must appear in the triangle
    // boundaries once with each sign.
    for (int i = 0; i < nE; ++i) {
        Int total = 0;
        for (int j = 0; j < nF; ++j) total += d2(i, j);
        if (total != 0) throw std::runtime_error("cusp link is not a torus");
    }

    IMat d1(nV, nE);  // boundary of sides in link vertices
    for (int i = 0; i < nE; ++i) {
        const LinkSideClass& sc = data.sides[cusp.sides[i]];
        d1(cusp.local_vertex_index(sc.head_lv), i) += 1;
        d1(cusp.local_vertex_index(sc.tail_lv), i) -= 1;
    }

    // First cohomology: ker(d2^T) / im(d1^T).
    IMat cod1 = d2.transposed();
    IMat K = integer_kernel(cod1);  // nE x k, saturated
    const int kdim = static_cast<int>(K.cols);

    IMat cod0 = d1.transposed();  // nE x nV
    IMat Y(kdim, nV);
    {
        QMat KQ(K.rows, K.cols);
        for (size_t r = 0; r < K.rows; ++r)
            for (size_t c = 0; c < K.cols; ++c) KQ(r, c) = Rat(K(r, c));
        for (int j = 0; j < nV; ++j) {
            std::vector<Rat> b(nE), y;
            for (int i = 0; i < nE; ++i) b[i] = Rat(cod0(i, j));
            bool ok = solve_rational(KQ, b, y);
            assert(ok);
            (void)ok;
            for (int i = 0; i < kdim; ++i) {
                assert(denominator(y[i]) == 1);
                Y(i, j) = numerator(y[i]);
            }
        }
    }

    SmithForm sf = smith_normal_form(Y);
    if (kdim - static_cast<int>(sf.rank) != 2) throw std::runtime_error("cusp link is not a torus");
    for (size_t i = 0; i < sf.rank; ++i)
        if (sf.D(i, i) != 1 && sf.D(i, i) != -1)
            throw std::runtime_error("cusp link is not a torus");

    cusp.cocycles.assign(2, std::vector<Int>(nE, 0));
    IMat W(kdim, 2);
    for (int i = 0; i < kdim; ++i)
        for (int j = 0; j < 2; ++j) W(i, j) = sf.Uinv(i, sf.rank + j);
    for (int j = 0; j < 2; ++j)
        for (int r = 0; r < nE; ++r) {
            Int s = 0;
            for (int i = 0; i < kdim; ++i) s += K(r, i) * W(i, j);
            cusp.cocycles[j][r] = s;
        }

    // Spanning tree over link vertices; fundamental cycles of non-tree sides.
    std::vector<int> tree_parent(nV, -1), tree_side(nV, -1), tree_sign(nV, 0), order;
    std::vector<bool> in_tree_side(nE, false), visited(nV, false);
    visited[0] = true;
    order.push_back(0);
    for (size_t head = 0; head < order.size(); ++head) {
        int vtx = order[head];
        for (int i = 0; i < nE; ++i) {
            const LinkSideClass& sc = data.sides[cusp.sides[i]];
            int a = cusp.local_vertex_index(sc.tail_lv);
            int b = cusp.local_vertex_index(sc.head_lv);
            int other = -1, sgn = 0;
            if (a == vtx && !visited[b]) {
                other = b;
                sgn = 1;  // tree edge points away from root with sign +1
            } else if (b == vtx && !visited[a]) {
                other = a;
                sgn = -1;
            }
            if (other >= 0) {
                visited[other] = true;
                tree_parent[other] = vtx;
                tree_side[other] = i;
                tree_sign[other] = sgn;
                in_tree_side[i] = true;
                order.push_back(other);
            }
        }
    }
    for (int v = 0; v < nV; ++v)
        if (!visited[v]) throw std::runtime_error("cusp link is not a torus");

    auto path_to_root = [&](int v, std::vector<Int>& chain, int scale) {
        while (tree_parent[v] != -1) {
            chain[tree_side[v]] += scale * tree_sign[v];
            v = tree_parent[v];
        }
    };

    std::vector<std::vector<Int>> gamma;
    for (int i = 0; i < nE; ++i) {
        if (in_tree_side[i]) continue;
        const LinkSideClass& sc = data.sides[cusp.sides[i]];
        int a = cusp.local_vertex_index(sc.tail_lv);
        int b = cusp.local_vertex_index(sc.head_lv);
        std::vector<Int> chain(nE, 0);
        chain[i] += 1;
        path_to_root(b, chain, -1);   // head back to root
        path_to_root(a, chain, 1);    // root out to tail
        gamma.push_back(std::move(chain));
    }
    const int ng = static_cast<int>(gamma.size());
    assert(ng >= 2);

    IMat P(2, ng);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < ng; ++j) {
            Int s = 0;
            for (int r = 0; r < nE; ++r) s += cusp.cocycles[i][r] * gamma[j][r];
            P(i, j) = s;
        }

    SmithForm psf = smith_normal_form(P);
    if (psf.rank != 2 || (psf.D(0, 0) != 1 && psf.D(0, 0) != -1) ||
        (psf.D(1, 1) != 1 && psf.D(1, 1) != -1))
        throw std::runtime_error("cusp link is not a torus");

    // X = V * [D^-1; 0] * U solves P X = I (Smith entries are units).
    IMat X(ng, 2);
    for (int j = 0; j < ng; ++j)
        for (int cidx = 0; cidx < 2; ++cidx) {
            Int s = 0;
            for (int i = 0; i < 2; ++i) s += psf.V(j, i) * psf.D(i, i) * psf.U(i, cidx);
            X(j, cidx) = s;
        }

    cusp.basis_cycles.assign(2, std::vector<Int>(nE, 0));
    for (int cidx = 0; cidx < 2; ++cidx)
        for (int j = 0; j < ng; ++j)
            if (X(j, cidx) != 0)
                for (int r = 0; r < nE; ++r)
                    cusp.basis_cycles[cidx][r] += X(j, cidx) * gamma[j][r];

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Int s = 0;
            for (int r = 0; r < nE; ++r) s += cusp.cocycles[i][r] * cusp.basis_cycles[j][r];
            assert(s == (i == j ? 1 : 0));
            (void)s;
        }

    // Basis cycles must be genuine cycles.
    for (int cidx = 0; cidx < 2; ++cidx)
        for (int v = 0; v < nV; ++v) {
            Int s = 0;
            for (int i = 0; i < nE; ++i) s += d1(v, i) * cusp.basis_cycles[cidx][i];
            assert(s == 0);
            (void)s;
        }
}

}  // namespace

LinkData compute_cusp_links(const IdealTriangulation& T, const std::vector<EdgeClass>& edges) {
    LinkData data;
    data.edges = edges;
    data.slot_map = build_slot_map(T, edges);

    const int nT = T.tet_count;

    // Cusps: orbits of corners (t,v) under face gluings.
    Dsu dsu(4 * nT);
    for (int t = 0; t < nT; ++t)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = T.gluings[t][f];
            for (int v = 0; v < 4; ++v)
                if (v != f) dsu.unite(4 * t + v, 4 * g.nbr + g.perm[v]);
        }

    data.cusp_of_corner.assign(nT, {-1, -1, -1, -1});
    std::map<int, int> root_to_cusp;
    for (int t = 0; t < nT; ++t)
        for (int v = 0; v < 4; ++v) {
            int root = dsu.find(4 * t + v);
            auto it = root_to_cusp.find(root);
            if (it == root_to_cusp.end()) {
                int id = static_cast<int>(data.cusps.size());
                root_to_cusp.emplace(root, id);
                data.cusps.push_back({});
                data.cusps.back().id = id;
                it = root_to_cusp.find(root);
            }
            data.cusp_of_corner[t][v] = it->second;
            data.cusps[it->second].triangles.push_back({t, v});
        }

    // Side classes: orbits (of size 2) of triangle sides under face gluings.
    data.side_at.assign(nT, {});
    for (int t = 0; t < nT; ++t)
        for (int v = 0; v < 4; ++v) data.side_at[t][v].fill(-1);

    for (int t = 0; t < nT; ++t)
        for (int v = 0; v < 4; ++v)
            for (int f = 0; f < 4; ++f) {
                if (f == v || data.side_at[t][v][f] != -1) continue;
                const FaceGluing& g = T.gluings[t][f];
                int mt = g.nbr, mv = g.perm[v], mf = g.perm[f];
                if (mt == t && mv == v && mf == f)
                    throw std::runtime_error("cusp link is not a torus");

                LinkSideClass sc;
                sc.id = static_cast<int>(data.sides.size());
                sc.cusp = data.cusp_of_corner[t][v];
                int u1 = -1, u2 = -1;
                for (int u = 0; u < 4; ++u)
                    if (u != v && u != f) (u1 < 0 ? u1 : u2) = u;
                sc.occ[0] = {t, v, f, u1, u2};
                sc.occ[1] = {mt, mv, mf, g.perm[u1], g.perm[u2]};
                sc.tail_lv = data.link_vertex_of(t, v, u1);
                sc.head_lv = data.link_vertex_of(t, v, u2);
                assert(data.cusp_of_corner[mt][mv] == sc.cusp);

                data.side_at[t][v][f] = sc.id;
                data.side_at[mt][mv][mf] = sc.id;
                data.sides.push_back(sc);
            }

    for (LinkSideClass& sc : data.sides) {
        CuspLink& cusp = data.cusps[sc.cusp];
        sc.local_index = static_cast<int>(cusp.sides.size());
        cusp.sides.push_back(sc.id);
    }

    // Link vertices per cusp.
    const int nLV = 2 * static_cast<int>(edges.size());
    data.lv_cusp.assign(nLV, -1);
    for (const EdgeClass& e : edges)
        for (const EdgeIncidence& inc : e.incidences) {
            int head = link_vertex_id(e.id, 0);
            int tail = link_vertex_id(e.id, 1);
            data.lv_cusp[head] = data.cusp_of_corner[inc.tet][inc.y];
            data.lv_cusp[tail] = data.cusp_of_corner[inc.tet][inc.x];
        }
    for (int lv = 0; lv < nLV; ++lv) {
        assert(data.lv_cusp[lv] >= 0);
        data.cusps[data.lv_cusp[lv]].link_vertices.push_back(lv);
    }

    for (CuspLink& cusp : data.cusps) {
        std::sort(cusp.triangles.begin(), cusp.triangles.end(),
                  [](const LinkTriangle& a, const LinkTriangle& b) {
                      return std::tie(a.tet, a.vertex) < std::tie(b.tet, b.vertex);
                  });
        std::sort(cusp.link_vertices.begin(), cusp.link_vertices.end());

        int V = static_cast<int>(cusp.link_vertices.size());
        int E = static_cast<int>(cusp.sides.size());
        int F = static_cast<int>(cusp.triangles.size());
        if (V - E + F != 0) throw std::runtime_error("cusp link is not a torus");
        link_homology(cusp, data);
    }
    return data;
}

}  // namespace tsurf
