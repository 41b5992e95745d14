#include "tsurf/enumeration.hpp"

#include "tsurf/json_io.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace tsurf {

namespace {

// Kernel generator of Q restricted to the given columns, when the nullity is
// exactly one and the generator is sign-definite; empty otherwise.
std::vector<Int> ray_from_columns(const QMatrix& Q, const std::vector<int>& cols) {
    const size_t m = cols.size();
    QMat sub(Q.mat.rows, m);
    for (size_t r = 0; r < Q.mat.rows; ++r)
        for (size_t j = 0; j < m; ++j) sub(r, j) = Rat(Q.mat(r, cols[j]));
    std::vector<size_t> pivots = rref(sub);
    if (m - pivots.size() != 1) return {};

    size_t free_col = 0;
    {
        std::vector<bool> is_pivot(m, false);
        for (size_t p : pivots) is_pivot[p] = true;
        while (free_col < m && is_pivot[free_col]) ++free_col;
    }
    std::vector<Rat> gen(m, Rat(0));
    gen[free_col] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) gen[pivots[r]] = -sub(r, free_col);

    int sign = 0;
    for (const Rat& v : gen) {
        if (v == 0) continue;
        int s = v > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        else if (sign != s) return {};
    }
    std::vector<Int> packed = primitive_integer_ray(gen);
    std::vector<Int> full(Q.mat.cols, 0);
    for (size_t j = 0; j < m; ++j) full[cols[j]] = packed[j] * sign;
    return full;
}

void collect_rays_for_pattern(const SupportPattern& pattern, const QMatrix& Q,
                              std::map<std::vector<Int>, bool>& out) {
    // Subsets of the pattern's support, one bit per supported tetrahedron.
    std::vector<int> active;
    for (int t = 0; t < Q.tet_count; ++t)
        if (pattern[t] >= 0) active.push_back(t);
    const size_t n = active.size();
    if (n == 0 || n >= 30) {
        if (n >= 30) throw std::runtime_error("solution too large to materialize");
        return;
    }
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        std::vector<int> cols;
        for (size_t b = 0; b < n; ++b)
            if (mask & (size_t(1) << b)) cols.push_back(3 * active[b] + pattern[active[b]]);
        std::vector<Int> ray = ray_from_columns(Q, cols);
        if (!ray.empty()) out.emplace(std::move(ray), true);
    }
}

VertexSolution make_vertex(std::vector<Int> primitive) {
    VertexSolution v;
    Int total = 0;
    for (const Int& e : primitive) total += e;
    v.projective.resize(primitive.size());
    for (size_t j = 0; j < primitive.size(); ++j) v.projective[j] = Rat(primitive[j], total);
    v.support.assign(primitive.size() / 3, -1);
    for (size_t j = 0; j < primitive.size(); ++j)
        if (primitive[j] != 0) v.support[j / 3] = static_cast<int>(j % 3);
    v.primitive = std::move(primitive);
    return v;
}

}  // namespace

std::vector<std::vector<Int>> extreme_rays(const SupportPattern& pattern, const QMatrix& Q) {
    if (static_cast<int>(pattern.size()) != Q.tet_count)
        throw std::runtime_error("malformed document: support pattern length does not match the triangulation");
    std::map<std::vector<Int>, bool> found;
    collect_rays_for_pattern(pattern, Q, found);
    std::vector<std::vector<Int>> out;
    for (auto& kv : found) out.push_back(kv.first);
    return out;
}

std::vector<VertexSolution> enumerate_admissible_vertices(const IdealTriangulation& T,
                                                          const QMatrix& Q) {
    // Every admissible support is a choice of at most one type per
    // tetrahedron; walk them all directly.
    std::map<std::vector<Int>, bool> found;
    SupportPattern pattern(T.tet_count, -1);
    std::vector<int> cols;
    std::function<void(int)> rec = [&](int t) {
        if (t == T.tet_count) {
            if (!cols.empty()) {
                std::vector<Int> ray = ray_from_columns(Q, cols);
                if (!ray.empty()) found.emplace(std::move(ray), true);
            }
            return;
        }
        rec(t + 1);
        for (int i = 0; i < 3; ++i) {
            cols.push_back(3 * t + i);
            rec(t + 1);
            cols.pop_back();
        }
    };
    rec(0);

    std::vector<VertexSolution> out;
    for (auto& kv : found) out.push_back(make_vertex(kv.first));
    return out;
}

std::string emit_vertex_solutions(const std::vector<VertexSolution>& vs) {
    OrderedJson doc;
    doc["schema_version"] = "1";
    OrderedJson arr = OrderedJson::array();
    for (const VertexSolution& v : vs) {
        OrderedJson entry;
        OrderedJson proj = OrderedJson::array();
        for (const Rat& r : v.projective) proj.push_back(json_from_rat(r));
        OrderedJson prim = OrderedJson::array();
        for (const Int& n : v.primitive) prim.push_back(json_from_int(n));
        OrderedJson sup = OrderedJson::array();
        for (int s : v.support) sup.push_back(s);
        entry["projective"] = proj;
        entry["primitive"] = prim;
        entry["support"] = sup;
        arr.push_back(entry);
    }
    doc["vertices"] = arr;
    return dump_json(doc);
}

}  // namespace tsurf
