#include "symprod/bridge.hpp"
#include "symprod/errors.hpp"

#include <doctest.h>

using namespace symprod;

TEST_SUITE("bridge")
{
    TEST_CASE("images of the generators are the chi classes")
    {
        SurfaceMap f(2, 3);
        const RingPresentation& p = f.ring();
        CHECK(f.image(mac::parse_polynomial("x2")) == SymCombination{{{{*p.find("a2")}, {}, 2}, 1}});
        CHECK(f.image(mac::parse_polynomial("x'1")) == SymCombination{{{{*p.find("a3")}, {}, 2}, 1}});
        CHECK(f.image(mac::parse_polynomial("y")) == SymCombination{{{{}, {{*p.find("b"), 1}}, 2}, 1}});
        CHECK(f.image(mac::parse_polynomial("1")) == SymCombination{{SymBasisIndex::unit(3), 1}});
        CHECK(expand(p, f.tensor_image(mac::Monomial{0, 1, 0})) == f.image(mac::Monomial{0, 1, 0}));
        CHECK_THROWS_AS(f.image(mac::parse_polynomial("x3")), MalformedElement);
    }

    TEST_CASE("(g,n) = (1,2): the degree-2 change of basis")
    {
        BridgeReport r = check_isomorphism(1, 2);
        REQUIRE(r.blocks.size() == 5);
        const DegreeBlock& b0 = r.blocks[0];
        CHECK(b0.matrix == IntegerMatrix{{1}});
        const DegreeBlock& b2 = r.blocks[2];
        CHECK(b2.rows == std::vector<std::string>{"y", "x1.x'1"});
        CHECK(b2.cols == std::vector<std::string>{"chi(|b;r=1)", "chi(a1,a2|;r=0)"});
        CHECK(b2.matrix == IntegerMatrix{{1, 0}, {1, 1}});
        CHECK(r.verdict == "isomorphism");
        CHECK(r.relations_sound == true);
        CHECK(r.multiplicative == true);
    }

    TEST_CASE("(g,n) = (2,2): ranks 1 4 7 4 1, all unimodular")
    {
        BridgeReport r = check_isomorphism(2, 2);
        std::vector<std::size_t> ranks;
        for (const auto& b : r.blocks) {
            ranks.push_back(b.sym_rank);
            CHECK(b.unimodular);
            CHECK(b.mac_rank == b.sym_rank);
            for (const auto& d : b.smith)
                CHECK(d == 1);
        }
        CHECK(ranks == std::vector<std::size_t>{1, 4, 7, 4, 1});
        CHECK(r.verdict == "isomorphism");
    }

    TEST_CASE("direct and table routes agree")
    {
        for (auto [g, n] : {std::pair{1u, 3u}, {2u, 2u}}) {
            BridgeReport a = check_isomorphism(g, n, Route::direct);
            BridgeReport b = check_isomorphism(g, n, Route::table);
            REQUIRE(a.blocks.size() == b.blocks.size());
            for (std::size_t s = 0; s < a.blocks.size(); ++s)
                CHECK(a.blocks[s] == b.blocks[s]);
        }
    }

    TEST_CASE("jobs do not change the report")
    {
        BridgeLimits serial, parallel;
        parallel.jobs = 4;
        CHECK(check_isomorphism(2, 3, Route::direct, serial) == check_isomorphism(2, 3, Route::direct, parallel));
    }

    TEST_CASE("relation soundness and multiplicativity on both routes")
    {
        for (Route route : {Route::direct, Route::table}) {
            SurfaceMap f(2, 3, route);
            CHECK(relations_sound(f));
            CHECK(multiplicativity_spot_check(f, 40, 99));
        }
    }

    TEST_CASE("a tight resource bound gives a partial report")
    {
        BridgeLimits limits;
        limits.max_tensor_terms = 4;
        BridgeReport r = check_isomorphism(2, 3, Route::direct, limits);
        REQUIRE(r.cutoff.has_value());
        CHECK(r.verdict == "partial");
        CHECK(r.blocks.size() == *r.cutoff);
        CHECK_FALSE(r.cutoff_reason.empty());
    }

    TEST_CASE("report JSON round-trip")
    {
        BridgeReport r = check_isomorphism(1, 3);
        CHECK(report_from_json(report_to_json(r)) == r);
        CHECK(report_from_json(nlohmann::json::parse(report_to_json(r).dump())) == r);
        BridgeLimits limits;
        limits.max_tensor_terms = 5;
        BridgeReport partial = check_isomorphism(1, 3, Route::direct, limits);
        CHECK(report_from_json(report_to_json(partial)) == partial);
        CHECK_THROWS_AS(report_from_json(nlohmann::json::parse(R"({"g": 1})")), ParseError);
        CHECK(report_to_text(r).find("verdict: isomorphism") != std::string::npos);
    }
}
