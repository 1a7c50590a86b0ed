#include <doctest.h>

#include "ptp/graph/generators.hpp"
#include "ptp/graph/io.hpp"
#include "ptp/graph/partitioned_graph.hpp"
#include "ptp/linalg/poly.hpp"

#include "../support/examples.hpp"
#include "../support/random_graph.hpp"

#include <filesystem>
#include <map>
#include <tuple>

using namespace ptp::graph;
using ptp::linalg::char_poly;
using ptp::linalg::IntMatrix;
using ptp::linalg::Poly;
using ptp::testing::RandomGraphShape;
using ptp::testing::random_directed;
using ptp::testing::random_undirected;

namespace {

// Vertex-by-vertex construction: each (u, v) with u, v in matching parts is
// a vertex; arcs are added by the four replacement rules.
IntMatrix ptp_by_replacement(const PartitionedGraph& g, const PartitionedGraph& h) {
    std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> id;
    const std::size_t gsize[2] = {g.m(), g.n()};
    const std::size_t hsize[2] = {h.m(), h.n()};
    for (int part = 0; part < 2; ++part)
        for (std::size_t u = 0; u < gsize[part]; ++u)
            for (std::size_t v = 0; v < hsize[part]; ++v) {
                const std::size_t next = id.size();
                id[{part, u, v}] = next;
            }
    IntMatrix out(id.size(), id.size());
    // Each vertex of U_i holds a copy of H restricted to V_i.
    for (int part = 0; part < 2; ++part)
        for (std::size_t u = 0; u < gsize[part]; ++u)
            for (std::size_t v = 0; v < hsize[part]; ++v)
                for (std::size_t w = 0; w < hsize[part]; ++w)
                    out(id[{part, u, v}], id[{part, u, w}]) += h.block(part, part)(v, w);
    // Each cross arc u → u' of G carries every cross arc v → v' of H in the same direction.
    for (int from = 0; from < 2; ++from) {
        const int to = 1 - from;
        for (std::size_t u = 0; u < gsize[from]; ++u)
            for (std::size_t u2 = 0; u2 < gsize[to]; ++u2) {
                const auto gc = g.block(from, to)(u, u2);
                if (gc == 0) continue;
                for (std::size_t v = 0; v < hsize[from]; ++v)
                    for (std::size_t v2 = 0; v2 < hsize[to]; ++v2)
                        out(id[{from, u, v}], id[{to, u2, v2}]) += gc * h.block(from, to)(v, v2);
            }
    }
    return out;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ptp_test_graph_" + name);
}

}  // namespace

TEST_CASE("construction validates shape, sign and symmetry") {
    CHECK_THROWS_AS(PartitionedGraph(false, IntMatrix(2, 2), IntMatrix(2, 1), IntMatrix(2, 1),
                                     IntMatrix(1, 1)),
                    GraphError);
    CHECK_THROWS_AS(PartitionedGraph(true, IntMatrix{{-1}}, IntMatrix(1, 0), IntMatrix(0, 1),
                                     IntMatrix(0, 0)),
                    GraphError);
    CHECK_THROWS_AS(PartitionedGraph(false, IntMatrix{{0, 1}, {0, 0}}, IntMatrix(2, 0),
                                     IntMatrix(0, 2), IntMatrix(0, 0)),
                    GraphError);
    // Undirected requires A10 = A01ᵀ.
    CHECK_THROWS_AS(PartitionedGraph(false, IntMatrix(1, 1), IntMatrix{{1, 0}},
                                     IntMatrix{{0}, {1}}, IntMatrix(2, 2)),
                    GraphError);
    CHECK_NOTHROW(PartitionedGraph(true, IntMatrix(1, 1), IntMatrix{{1, 0}}, IntMatrix{{0}, {1}},
                                   IntMatrix(2, 2)));
    const PartitionedGraph empty;
    CHECK(empty.vertex_count() == 0);
}

TEST_CASE("from_split orders both parts by ascending index") {
    const PartitionedGraph p = path(4, std::vector<std::size_t>{3, 1});
    CHECK(p.m() == 2);
    CHECK(p.n() == 2);
    // Part 0 = (1, 3), part 1 = (0, 2).
    CHECK(p.a01() == IntMatrix{{1, 1}, {0, 1}});
    CHECK(p.a00().is_zero());
    CHECK_THROWS_AS(path(3, std::vector<std::size_t>{0, 0}), GraphError);
    CHECK_THROWS_AS(path(3, std::vector<std::size_t>{5}), GraphError);
}

TEST_CASE("single-edge G reproduces H") {
    const PartitionedGraph edge = complete_bipartite(1, 1);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const PartitionedGraph h =
            trial % 2 ? random_directed(rng, {}) : random_undirected(rng, {});
        CHECK(ptp_adjacency_exact(edge, h) == h.adjacency());
    }
}

TEST_CASE("product dimension for parts 2/1 and 2/3") {
    const PartitionedGraph g = PartitionedGraph::undirected(IntMatrix(2, 2), IntMatrix{{1}, {1}},
                                                            IntMatrix(1, 1));
    const PartitionedGraph h = path(5, std::vector<std::size_t>{0, 1});
    CHECK(ptp_adjacency(g, h).rows() == 7);
    CHECK(ptp_adjacency(reflect(g), h).rows() == 1 * 2 + 2 * 3);
}

TEST_CASE("property: Kronecker blocks equal the replacement construction") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        const RandomGraphShape shape{0, 4, 2, true};
        const PartitionedGraph g =
            trial % 2 ? random_directed(rng, shape) : random_undirected(rng, shape);
        const PartitionedGraph h =
            trial % 3 ? random_directed(rng, shape) : random_undirected(rng, shape);
        const IntMatrix kb = ptp_adjacency_exact(g, h);
        REQUIRE(kb == ptp_by_replacement(g, h));

        // Vertex and arc counts.
        CHECK(kb.rows() == g.m() * h.m() + g.n() * h.n());
        const std::int64_t arcs = static_cast<std::int64_t>(g.m()) * h.a00().sum() +
                                  static_cast<std::int64_t>(g.n()) * h.a11().sum() +
                                  g.a01().sum() * h.a01().sum() + g.a10().sum() * h.a10().sum();
        CHECK(kb.sum() == arcs);
        if (!g.directed() && !h.directed()) CHECK(kb.is_symmetric());

        // Reflection is an involution and swaps the product dimension.
        const PartitionedGraph gr = reflect(g);
        CHECK(reflect(gr) == g);
        CHECK(gr.arc_count() == g.arc_count());
        CHECK(ptp_adjacency_exact(gr, h).rows() == g.n() * h.m() + g.m() * h.n());
    }
}

TEST_CASE("arcs of G inside a part are ignored with a warning") {
    const PartitionedGraph g = PartitionedGraph::undirected(IntMatrix{{0, 1}, {1, 0}},
                                                            IntMatrix{{1}, {0}}, IntMatrix(1, 1));
    const PartitionedGraph stripped = PartitionedGraph::undirected(IntMatrix(2, 2),
                                                                   g.a01(), IntMatrix(1, 1));
    const PartitionedGraph h = cycle(5, std::vector<std::size_t>{0, 1});
    std::vector<std::string> warnings;
    CHECK(ptp_adjacency_exact(g, h, &warnings) == ptp_adjacency_exact(stripped, h));
    CHECK(warnings.size() == 1);
    warnings.clear();
    ptp_adjacency_exact(stripped, h, &warnings);
    CHECK(warnings.empty());
}

TEST_CASE("ptp_graph keeps the block order as its split") {
    const PartitionedGraph g = complete_bipartite(2, 1);
    const PartitionedGraph h = path(3);
    const PartitionedGraph prod = ptp_graph(g, h);
    CHECK(prod.m() == 2 * 2);
    CHECK(prod.n() == 1 * 1);
    CHECK(!prod.directed());
    CHECK(prod.adjacency() == ptp_adjacency_exact(g, h));
}

TEST_CASE("arrow") {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        const PartitionedGraph h = random_undirected(rng, {1, 4, 2, true});
        CHECK(ptp::linalg::max_abs_diff(arrow(h, 1.0), DenseMatrix(h.adjacency())) == 0.0);

        // σ = 0 decouples the parts.
        const Poly p0 = char_poly(arrow(h, 0.0), ptp::linalg::CharPolyMode::exact);
        CHECK(p0 == ptp::linalg::poly_mul(char_poly(h.a00()), char_poly(h.a11())));

        // H↑σ and H↑(−σ) are similar.
        const double s = 0.25 + trial * 0.1;
        const Poly plus = char_poly(arrow(h, s), ptp::linalg::CharPolyMode::floating);
        const Poly minus = char_poly(arrow(h, -s), ptp::linalg::CharPolyMode::floating);
        CHECK(ptp::linalg::poly_eq(plus, minus, 1e-8));
    }
}

TEST_CASE("arrow of the partitioned 5-cycle has off-diagonal entries in {0, 1, sigma}") {
    const PartitionedGraph c5 = cycle(5, std::vector<std::size_t>{0, 1});
    const Complex sigma(1.7, 0.0);
    const DenseMatrix a = arrow(c5, sigma);
    int ones = 0, sigmas = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(a(i, i) == Complex(0.0));
        for (std::size_t j = 0; j < 5; ++j) {
            if (i == j) continue;
            const Complex e = a(i, j);
            CHECK((e == Complex(0.0) || e == Complex(1.0) || e == sigma));
            ones += e == Complex(1.0);
            sigmas += e == sigma;
        }
    }
    // Three edges inside the parts, two across, each stored twice.
    CHECK(ones == 6);
    CHECK(sigmas == 4);
}

TEST_CASE("generators") {
    SUBCASE("path and cycle default to even indices in part 0") {
        const PartitionedGraph p = path(5);
        CHECK(p.m() == 3);
        CHECK(p.a00().is_zero());
        CHECK(p.a01().sum() == 4);
        const PartitionedGraph c = cycle(6);
        CHECK(c.a00().is_zero());
        CHECK(c.a11().is_zero());
        CHECK(c.arc_count() == 12);
        CHECK_THROWS_AS(cycle(2), GraphError);
    }
    SUBCASE("hypercube parity split has empty within-part blocks") {
        for (std::size_t m = 1; m <= 5; ++m) {
            const PartitionedGraph q = hypercube(m);
            CHECK(q.m() == (std::size_t{1} << (m - 1)));
            CHECK(q.n() == q.m());
            CHECK(q.a00().is_zero());
            CHECK(q.a11().is_zero());
            CHECK(q.arc_count() == static_cast<std::int64_t>(m << m));
        }
        // Part 0 of the 2-cube is {00, 11}, part 1 is {01, 10}.
        CHECK(hypercube(2).a01() == IntMatrix{{1, 1}, {1, 1}});
    }
    SUBCASE("complete bipartite") {
        const PartitionedGraph k = complete_bipartite(2, 3);
        CHECK(k.a01() == IntMatrix(2, 3, 1));
        CHECK(k.a10() == IntMatrix(3, 2, 1));
    }
    SUBCASE("bridge join") {
        const IntMatrix tri{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
        const IntMatrix p2{{0, 1}, {1, 0}};
        const PartitionedGraph b = bridge_join(tri, p2, 2, 1);
        CHECK(b.a01().sum() == 1);
        CHECK(b.a01()(2, 1) == 1);
        CHECK(b.arc_count() == 6 + 2 + 2);
        CHECK_THROWS_AS(bridge_join(tri, p2, 3, 0), GraphError);
        CHECK_THROWS_AS(bridge_join(tri, p2, 0, 2), GraphError);
        // At σ = 0 the bridge vanishes and the char poly factors.
        const Poly p = char_poly(arrow(b, 0.0), ptp::linalg::CharPolyMode::exact);
        CHECK(p == ptp::linalg::poly_mul(char_poly(tri), char_poly(p2)));
    }
}

TEST_CASE("circulant family (2, 3) reproduces the printed 18x18 matrix") {
    const PartitionedGraph h = circulant_family(2, 3);
    CHECK(h.m() == 6);
    CHECK(h.n() == 12);
    CHECK(!h.directed());
    CHECK(h.adjacency() == ptp::testing::circulant23_printed());
    const IntMatrix upper_left = IntMatrix::from_rows(
        {{0, 0, 1, 1, 1, 0}, {0, 0, 0, 1, 1, 1}, {1, 0, 0, 0, 1, 1},
         {1, 1, 0, 0, 0, 1}, {1, 1, 1, 0, 0, 0}, {0, 1, 1, 1, 0, 0}});
    CHECK(induced_block(h, 0) == upper_left);
    CHECK_THROWS_AS(circulant_family(4, 2), GraphError);
    CHECK_THROWS_AS(circulant_family(0, 0), GraphError);
}

TEST_CASE("circulant family shapes and commutation") {
    for (std::size_t k = 1; k <= 4; ++k)
        for (std::size_t j = 0; j < 2 * k; ++j) {
            const PartitionedGraph h = circulant_family(j, k);
            CHECK(h.m() == 2 * k);
            CHECK(h.n() == 4 * k);
            CHECK(h.a00() * h.a01() == h.a01() * h.a11());
        }
}

TEST_CASE("induced blocks") {
    const PartitionedGraph q = hypercube(3);
    CHECK(induced_block(q, 0) == IntMatrix(4, 4));
    const PartitionedGraph p3 = path(3, std::vector<std::size_t>{1});
    CHECK(induced_block(p3, 0) == IntMatrix(1, 1));
    CHECK_THROWS_AS(induced_block(p3, 2), std::out_of_range);
}

TEST_CASE("group presentations") {
    GroupPresentation z5{5, cyclic_group_table(5), {1, 4}, {0}};
    CHECK_NOTHROW(z5.validate());
    z5.connection_set = {1};
    CHECK_THROWS_AS(z5.validate(), GraphError);

    // In the dihedral group of order 6, {e, s} is a subgroup but not normal;
    // the rotations form a normal subgroup.
    GroupPresentation d3{6, dihedral_group_table(3), {1, 2}, {0, 3}};
    CHECK_THROWS_WITH_AS(d3.validate(), "Y is not a normal subgroup", GraphError);
    d3.normal_subgroup = {0, 1, 2};
    CHECK_NOTHROW(d3.validate());
    d3.normal_subgroup = {0, 1};
    CHECK_THROWS_WITH_AS(d3.validate(), "Y is not a subgroup", GraphError);

    GroupPresentation bad{2, {{0, 1}, {1, 1}}, {}, {0}};
    CHECK_THROWS_AS(bad.validate(), GraphError);
}

TEST_CASE("cayley construction commutes and reduces to the Cartesian product") {
    SUBCASE("H00·H01 = H01·H11 for normal Y") {
        const GroupPresentation groups[] = {
            {6, dihedral_group_table(3), {3, 4, 5}, {0, 1, 2}},
            {8, dihedral_group_table(4), {1, 3, 4}, {0, 2}},
            {8, cyclic_group_table(8), {1, 7, 4}, {0, 2, 4, 6}},
            {6, dihedral_group_table(3), {1, 2, 3}, {0, 1, 2, 3, 4, 5}},
        };
        for (const auto& gp : groups) {
            const PartitionedGraph h = cayley(gp);
            CHECK(!h.directed());
            CHECK(h.a00() == h.a11());
            CHECK(h.a00() * h.a01() == h.a01() * h.a11());
        }
    }
    SUBCASE("trivial Y") {
        const std::size_t n = 5;
        const PartitionedGraph h = cayley({n, cyclic_group_table(n), {1, 4}, {0}});
        CHECK(h.a01() == IntMatrix::identity(n));
        std::mt19937 rng(34);
        for (int trial = 0; trial < 10; ++trial) {
            const PartitionedGraph g = random_undirected(rng, {1, 3, 2, false});
            const std::size_t u = g.vertex_count();
            const IntMatrix cartesian = kron(IntMatrix::identity(u), h.a00()) +
                                        kron(g.adjacency(), IntMatrix::identity(n));
            CHECK(ptp_adjacency_exact(g, h) == cartesian);
        }
    }
}

TEST_CASE("JSON round trip") {
    std::mt19937 rng(35);
    for (int trial = 0; trial < 50; ++trial) {
        const PartitionedGraph g = trial % 2 ? random_directed(rng, {0, 4, 3, true})
                                             : random_undirected(rng, {0, 4, 3, true});
        const std::string text = to_canonical_json(g);
        const PartitionedGraph back = parse_graph(text);
        CHECK(back == g);
        CHECK(to_canonical_json(back) == text);
        CHECK(graph_from_json(to_json(g)) == g);
    }
    const PartitionedGraph h = circulant_family(2, 3);
    const auto file = temp_file("circulant.json");
    save(h, file);
    CHECK(load(file) == h);
    std::filesystem::remove(file);
    CHECK_THROWS_AS(load(temp_file("does_not_exist.json")), IoError);
}

TEST_CASE("schema errors carry a JSON path") {
    const auto path_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const SchemaError& e) {
            return e.path();
        }
        return std::string("<no error>");
    };
    const std::string ok_blocks = R"("blocks": {"00": [[0]], "01": [[1, 0]], "10": [[1], [0]], "11": [[0, 0], [0, 0]]})";
    CHECK(path_of(R"({"directed": false, "part_sizes": [1, 2], )" + ok_blocks + "}") ==
          "<no error>");
    CHECK(path_of("not json") == "");
    CHECK(path_of("[]") == "");
    CHECK(path_of(R"({"part_sizes": [1, 2], )" + ok_blocks + "}") == "/directed");
    CHECK(path_of(R"({"directed": 1, "part_sizes": [1, 2], )" + ok_blocks + "}") == "/directed");
    CHECK(path_of(R"({"directed": false, "part_sizes": [1], )" + ok_blocks + "}") ==
          "/part_sizes");
    CHECK(path_of(R"({"directed": false, "part_sizes": [1, -2], )" + ok_blocks + "}") ==
          "/part_sizes/1");
    CHECK(path_of(R"({"directed": false, "part_sizes": [1, 2], "extra": 0, )" + ok_blocks + "}") ==
          "/extra");
    CHECK(path_of(R"({"directed": false, "part_sizes": [1, 2], "blocks": {"00": [[0]], "01": [[1, 0]], "10": [[1], [0]], "11": [[0, 0], [0, -1]]}})") ==
          "/blocks/11/1/1");
    CHECK(path_of(R"({"directed": false, "part_sizes": [1, 2], "blocks": {"00": [[0]], "01": [[1, 0]], "10": [[1], [0]], "11": [[0, 0], [0]]}})") ==
          "/blocks/11/1");
    CHECK(path_of(R"({"directed": false, "part_sizes": [1, 2], "blocks": {"00": [[0]], "01": [[1, 0]], "10": [[1], [0]]}})") ==
          "/blocks/11");
    CHECK(path_of(R"({"directed": false, "part_sizes": [1, 2], "blocks": {"00": [[0.5]], "01": [[1, 0]], "10": [[1], [0]], "11": [[0, 0], [0, 0]]}})") ==
          "/blocks/00/0/0");
    // Undirected with A10 ≠ A01ᵀ.
    CHECK(path_of(R"({"directed": false, "part_sizes": [1, 2], "blocks": {"00": [[0]], "01": [[1, 0]], "10": [[0], [1]], "11": [[0, 0], [0, 0]]}})") ==
          "/blocks");
    CHECK(path_of(R"({"directed": true, "part_sizes": [1, 2], "blocks": {"00": [[0]], "01": [[1, 0]], "10": [[0], [1]], "11": [[0, 0], [0, 0]]}})") ==
          "<no error>");
}

TEST_CASE("empty parts serialize as empty arrays") {
    const PartitionedGraph g(true, IntMatrix(0, 0), IntMatrix(0, 2), IntMatrix(2, 0),
                             IntMatrix{{0, 1}, {1, 0}});
    const std::string text = to_canonical_json(g);
    CHECK(text.find("\"00\": []") != std::string::npos);
    CHECK(parse_graph(text) == g);
}

TEST_CASE("DOT export") {
    const PartitionedGraph u = PartitionedGraph::undirected(IntMatrix{{0}}, IntMatrix{{2, 1}},
                                                            IntMatrix(2, 2));
    const std::string dot = to_dot(u);
    CHECK(dot.rfind("graph \"G\" {", 0) == 0);
    CHECK(dot.find("\"(0,0)\" -- \"(1,0)\" [label=\"×2\"];") != std::string::npos);
    CHECK(dot.find("\"(0,0)\" -- \"(1,1)\";") != std::string::npos);
    CHECK(dot.find("\"(1,0)\" -- \"(0,0)\"") == std::string::npos);  // each edge once

    const PartitionedGraph d(true, IntMatrix{{0}}, IntMatrix{{1}}, IntMatrix{{3}}, IntMatrix{{0}});
    const std::string ddot = to_dot(d, "D");
    CHECK(ddot.rfind("digraph \"D\" {", 0) == 0);
    CHECK(ddot.find("\"(0,0)\" -> \"(1,0)\";") != std::string::npos);
    CHECK(ddot.find("\"(1,0)\" -> \"(0,0)\" [label=\"×3\"];") != std::string::npos);

    const auto file = temp_file("g.dot");
    export_dot(u, file);
    CHECK(std::filesystem::file_size(file) == dot.size());
    std::filesystem::remove(file);
}
