#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tsurf/json_io.hpp"
#include "tsurf/qmatching.hpp"

#include "fixtures.hpp"

#include <map>
#include <random>
#include <vector>

using namespace tsurf;

namespace {

// Hand-derived sign table: sign_table[pair_index({a,b})][type].
// Derivation: with (a,b,c,d) even, the type separating {a,c}|{b,d} is +1 and
// the type separating {a,d}|{b,c} is -1; a type containing {a,b} in one part
// is 0.
const int sign_table[6][3] = {
    // {0,1}: even completion (2,3) -> {0,2}|{1,3} = type 1 is +1, type 2 is -1
    {0, 1, -1},
    // {0,2}: even completion (3,1) -> {0,3}|{1,2} = type 2 is +1, type 0 is -1
    {-1, 0, 1},
    // {0,3}: even completion (1,2) -> {0,1}|{2,3} = type 0 is +1, type 1 is -1
    {1, -1, 0},
    // {1,2}: even completion (0,3) -> {0,1}|{2,3} = type 0 is +1, type 1 is -1
    {1, -1, 0},
    // {1,3}: even completion (2,0) -> {1,2}|{0,3} = type 2 is +1, type 0 is -1
    {-1, 0, 1},
    // {2,3}: even completion (0,1) -> {0,2}|{1,3} = type 1 is +1, type 2 is -1
    {0, 1, -1},
};

// Fraction-free integer rank (Bareiss), independent of the library's
// elimination code.
int bareiss_rank(std::vector<std::vector<long long>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    long long prev = 1;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

const std::vector<const char*> all_fixtures = {
    fixtures::fig8, fixtures::tet1_two_edges, fixtures::tri3,       fixtures::tri4,
    fixtures::tri5, fixtures::tri6,           fixtures::tri8,       fixtures::tri4_cusp2,
    fixtures::tri5_cusp2, fixtures::tri6_cusp2,
};

}  // namespace

TEST_CASE("quad edge signs match the hand table") {
    for (int pi = 0; pi < 6; ++pi) {
        auto [a, b] = pair_vertices(pi);
        for (int i = 0; i < 3; ++i) {
            CHECK(quad_edge_sign(a, b, i) == sign_table[pi][i]);
            CHECK(quad_edge_sign(b, a, i) == sign_table[pi][i]);
        }
    }
    CHECK(quad_edge_sign(0, 1, 0) == 0);
    CHECK(quad_edge_sign(0, 2, 0) == -1);
}

TEST_CASE("each edge meets one positive, one negative, and one parallel type") {
    for (int pi = 0; pi < 6; ++pi) {
        auto [a, b] = pair_vertices(pi);
        int sum = 0, zero = 0;
        for (int i = 0; i < 3; ++i) {
            sum += quad_edge_sign(a, b, i);
            if (quad_edge_sign(a, b, i) == 0) ++zero;
        }
        CHECK(sum == 0);
        CHECK(zero == 1);
    }
}

TEST_CASE("per tetrahedron all-ones vectors lie in the kernel") {
    for (const char* doc : all_fixtures) {
        IdealTriangulation T = parse_triangulation(doc);
        auto edges = compute_edge_classes(T);
        QMatrix Q = build_q_matrix(T, edges);
        for (int t = 0; t < T.tet_count; ++t) {
            QuadVector x(3 * T.tet_count, Rat(0));
            for (int i = 0; i < 3; ++i) x[3 * t + i] = 1;
            MatchingReport rep = verify_q_matching(Q, x);
            CHECK(rep.matches);
        }
    }
}

TEST_CASE("column sums over edge classes vanish") {
    for (const char* doc : all_fixtures) {
        IdealTriangulation T = parse_triangulation(doc);
        auto edges = compute_edge_classes(T);
        QMatrix Q = build_q_matrix(T, edges);
        for (size_t c = 0; c < Q.mat.cols; ++c) {
            Int s = 0;
            for (size_t r = 0; r < Q.mat.rows; ++r) s += Q.mat(r, c);
            CHECK(s == 0);
        }
    }
}

TEST_CASE("figure eight matrix shape and rank") {
    IdealTriangulation T = parse_triangulation(fixtures::fig8);
    auto edges = compute_edge_classes(T);
    QMatrix Q = build_q_matrix(T, edges);
    REQUIRE(Q.mat.rows == 2);
    REQUIRE(Q.mat.cols == 6);

    std::vector<std::vector<long long>> m(2, std::vector<long long>(6));
    for (size_t r = 0; r < 2; ++r)
        for (size_t c = 0; c < 6; ++c) m[r][c] = static_cast<long long>(Q.mat(r, c));
    CHECK(bareiss_rank(m) == 1);  // kernel dimension 5

    // The two matching equations are negatives of each other here.
    for (size_t c = 0; c < 6; ++c) CHECK(Q.mat(0, c) == -Q.mat(1, c));
}

TEST_CASE("matrix entries equal the incidence sign sums") {
    for (const char* doc : {fixtures::fig8, fixtures::tri4_cusp2}) {
        IdealTriangulation T = parse_triangulation(doc);
        auto edges = compute_edge_classes(T);
        QMatrix Q = build_q_matrix(T, edges);
        for (const EdgeClass& e : edges)
            for (int t = 0; t < T.tet_count; ++t)
                for (int i = 0; i < 3; ++i) {
                    Int expect = 0;
                    for (const EdgeIncidence& inc : e.incidences)
                        if (inc.tet == t) expect += sign_table[pair_index(inc.x, inc.y)][i];
                    CHECK(Q.mat(e.id, 3 * t + i) == expect);
                }
    }
}

TEST_CASE("admissibility predicate") {
    QuadVector zero(6, Rat(0));
    CHECK(is_admissible(zero).admissible);

    QuadVector two_types(6, Rat(0));
    two_types[0] = 1;
    two_types[1] = 1;
    Admissibility a = is_admissible(two_types);
    CHECK(!a.admissible);
    CHECK(a.violation == "multiple quad types at tetrahedron 0");

    QuadVector negative(6, Rat(0));
    negative[4] = -1;
    Admissibility b = is_admissible(negative);
    CHECK(!b.admissible);
    CHECK(b.violation == "negative entry at tetrahedron 1 type 1");

    QuadVector fine(6, Rat(0));
    fine[2] = 3;
    fine[3] = Rat(1, 2);
    CHECK(is_admissible(fine).admissible);
}

TEST_CASE("verification reports exact residuals") {
    IdealTriangulation T = parse_triangulation(fixtures::fig8);
    auto edges = compute_edge_classes(T);
    QMatrix Q = build_q_matrix(T, edges);

    std::mt19937 rng(440519);
    for (int trial = 0; trial < 50; ++trial) {
        QuadVector x(6);
        for (auto& v : x) v = Rat(static_cast<int>(rng() % 9) - 4);
        MatchingReport rep = verify_q_matching(Q, x);
        REQUIRE(rep.residuals.size() == 2);
        bool all_zero = true;
        for (size_t e = 0; e < 2; ++e) {
            Rat expect = 0;
            for (size_t c = 0; c < 6; ++c) expect += Rat(Q.mat(e, c)) * x[c];
            CHECK(rep.residuals[e] == expect);
            if (expect != 0) all_zero = false;
        }
        CHECK(rep.matches == all_zero);

        // A globally negated matrix accepts exactly the same vectors.
        QMatrix neg = Q;
        for (size_t r = 0; r < neg.mat.rows; ++r)
            for (size_t c = 0; c < neg.mat.cols; ++c) neg.mat(r, c) = -Q.mat(r, c);
        CHECK(verify_q_matching(neg, x).matches == rep.matches);
    }
}

TEST_CASE("doubling and primitive scaling") {
    QuadVector x = {Rat(1, 2), Rat(0), Rat(0), Rat(3), Rat(0), Rat(0)};
    QuadVector d = double_solution(x);
    CHECK(d[0] == 1);
    CHECK(d[3] == 6);

    std::vector<Int> p = scale_to_primitive(x);
    CHECK(p[0] == 1);
    CHECK(p[3] == 6);

    QuadVector y = {Rat(4), Rat(0), Rat(0), Rat(6), Rat(0), Rat(0)};
    std::vector<Int> py = scale_to_primitive(y);
    CHECK(py[0] == 2);
    CHECK(py[3] == 3);

    CHECK_THROWS(scale_to_primitive(QuadVector(6, Rat(0))));
}

TEST_CASE("quad vector json round trip") {
    QuadVector x = parse_quad_vector(R"([1,"1/2",0,"7",0,2])", 2);
    CHECK(x[1] == Rat(1, 2));
    CHECK(x[3] == 7);
    std::string s = emit_quad_vector(x);
    QuadVector y = parse_quad_vector(s, 2);
    CHECK(x == y);

    CHECK_THROWS(parse_quad_vector("[1,2]", 2));
    CHECK_THROWS(parse_quad_vector("{}", 1));
    CHECK_THROWS(parse_quad_vector(R"([1,"1/0",0])", 1));
}

TEST_CASE("q matrix json has legends") {
    IdealTriangulation T = parse_triangulation(fixtures::fig8);
    auto edges = compute_edge_classes(T);
    QMatrix Q = build_q_matrix(T, edges);
    std::string s = emit_q_matrix(Q);
    auto doc = nlohmann::json::parse(s);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["matrix"].size() == 2);
    CHECK(doc["matrix"][0].size() == 6);
    CHECK(doc["row_edges"].size() == 2);
    CHECK(doc["col_legend"].size() == 6);
    CHECK(doc["col_legend"][4]["tet"] == 1);
    CHECK(doc["col_legend"][4]["type"] == 1);
}
