#include "support.hpp"

#include "golodkit/simplicial.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace golodkit;

namespace {

SimplicialComplex cycle5()
{
    std::vector<CellId> facets;
    for (int i = 0; i < 5; ++i)
        facets.push_back((1u << i) | (1u << ((i + 1) % 5)));
    return SimplicialComplex::from_facets(5, facets);
}

} // namespace

TEST_SUITE("simplicial")
{
    TEST_CASE("downward closure is enforced")
    {
        CHECK_THROWS_AS(SimplicialComplex(3, {0, 0b011}), std::invalid_argument);
        SimplicialComplex ok(3, {0, 0b001, 0b010, 0b011});
        CHECK(ok.dimension() == 1);
        CHECK(ok.facets() == std::vector<CellId>{0b011});
        auto d = SimplicialComplex::from_facets(3, {0b011, 0b110});
        for (CellId f : d.faces())
            for (CellId g = f; g; g = (g - 1) & f)
                CHECK(d.contains(g));
        CHECK(d.contains(0));
    }

    TEST_CASE("void complex and {∅} are distinct")
    {
        SimplicialComplex v;
        CHECK(v.is_void());
        CHECK(v.dimension() == -2);
        CHECK(reduced_homology_ranks(v, Field::rationals()).empty());
        SimplicialComplex e(2, {0});
        CHECK(e.dimension() == -1);
        CHECK(reduced_homology_ranks(e, Field::rationals()) == std::vector<std::size_t>{1});
        CHECK_FALSE(v == e);
    }

    TEST_CASE("reduced homology matches the frozen oracle")
    {
        // entry k is degree k-1
        CHECK(reduced_homology_ranks(cycle5(), Field::rationals()) == std::vector<std::size_t>{0, 0, 1});
        auto points = SimplicialComplex::from_facets(2, {0b01, 0b10});
        CHECK(reduced_homology_ranks(points, Field::rationals()) == std::vector<std::size_t>{0, 1});
        auto simplex = SimplicialComplex::full_simplex(4);
        auto h = reduced_homology_ranks(simplex, Field::rationals());
        CHECK(std::all_of(h.begin(), h.end(), [](std::size_t x) { return x == 0; }));
        // hollow triangle is a circle in every characteristic
        auto hollow = SimplicialComplex::from_facets(3, {0b011, 0b110, 0b101});
        CHECK(reduced_homology_ranks(hollow, Field::prime(2)) == std::vector<std::size_t>{0, 0, 1});
    }

    TEST_CASE("restriction to a multidegree")
    {
        auto I = *testing::fixture_ideal("fourgen");
        auto full = SimplicialComplex::full_simplex(4);
        // x1*x2*x4 is divisible by m1, m3 (x2*x4), m4 (x1*x4) and their lcms
        auto R = restrict_to(full, I, Monomial({1, 1, 0, 1}));
        std::set<CellId> faces(R.faces().begin(), R.faces().end());
        CHECK(faces == std::set<CellId>{0, 0b0001, 0b0100, 0b1000, 0b0101, 0b1001, 0b1100, 0b1101});
        // the unit restricts to {∅}
        CHECK(restrict_to(full, I, Monomial(4)).dimension() == -1);
    }

    TEST_CASE("lcm lattice agrees with brute force")
    {
        for (const char* name : {"fourgen", "pentagon", "avramov", "katthan"}) {
            auto I = *testing::fixture_ideal(name);
            std::vector<Monomial> brute;
            for (CellId J = 1; J <= I.full_cell(); ++J) {
                auto m = I.multidegree(J);
                if (std::find(brute.begin(), brute.end(), m) == brute.end())
                    brute.push_back(m);
            }
            auto L = lcm_lattice(I);
            CHECK(L.size() == brute.size());
            for (const auto& m : brute)
                CHECK(std::find(L.begin(), L.end(), m) != L.end());
            for (std::size_t k = 1; k < L.size(); ++k)
                CHECK(L[k - 1].total_degree() <= L[k].total_degree());
        }
    }

    TEST_CASE("resolution criterion")
    {
        auto three = *testing::ideal("ring x1 x2 x3; ideal x1, x2, x3;");
        auto hollow = SimplicialComplex::from_facets(3, {0b011, 0b110, 0b101});
        auto v = is_resolution(hollow, three);
        CHECK_FALSE(v.is_resolution);
        REQUIRE(v.witness);
        CHECK(*v.witness == Monomial({1, 1, 1}));
        CHECK(v.witness_degree == 1);
        CHECK(is_resolution(SimplicialComplex::full_simplex(3), three).is_resolution);

        auto path_ideal = *testing::ideal("ring x y; ideal x^2, x*y, y^2;");
        auto path = SimplicialComplex::from_facets(3, {0b011, 0b110});
        CHECK(is_resolution(path, path_ideal).is_resolution);
        auto bad = SimplicialComplex::from_facets(3, {0b011, 0b100});
        CHECK_FALSE(is_resolution(bad, path_ideal).is_resolution);

        // the full simplex always resolves (Taylor)
        for (const char* name : {"fourgen", "pentagon", "avramov"}) {
            auto I = *testing::fixture_ideal(name);
            CHECK(is_resolution(SimplicialComplex::full_simplex(I.size()), I).is_resolution);
        }
    }

    TEST_CASE("Stanley-Reisner correspondence round-trips")
    {
        auto c = cycle5();
        auto I = stanley_reisner_ideal(c);
        // minimal non-faces of the 5-cycle: the five diagonals
        CHECK(I.size() == 5);
        for (const auto& g : I.generators())
            CHECK(g.total_degree() == 2);
        CHECK(stanley_reisner_complex(I) == c);
        CHECK_THROWS_AS(stanley_reisner_ideal(SimplicialComplex::full_simplex(3)), std::invalid_argument);
        CHECK_THROWS_AS(stanley_reisner_complex(*testing::ideal("ring x y; ideal x^2, y;")), std::invalid_argument);
    }
}
