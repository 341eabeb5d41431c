#include <doctest.h>

#include <random>
#include <string>

#include "shiftinv/errors.hpp"
#include "shiftinv/report.hpp"
#include "shiftinv/sampling.hpp"
#include "helpers.hpp"

using namespace shiftinv;

namespace {

const char* kAnalyzeDoc = R"({
  "group": {"cyclic_orders": [4]},
  "distributions": {"Y": {"probs": {"[2]": "1"}}},
  "command": "analyze"
})";

} // namespace

TEST_SUITE("request parsing") {
    TEST_CASE("accepts the schema example") {
        const AnalysisRequest request = parse_request(kAnalyzeDoc);
        CHECK(request.command == Command::Analyze);
        REQUIRE(request.group.has_value());
        CHECK(request.group->cyclic_orders() == std::vector<std::uint64_t>{4});
        const Distribution* y = request.find_distribution("Y");
        REQUIRE(y != nullptr);
        CHECK(y->prob_at(2) == 1);
    }

    TEST_CASE("rejects bad mass") {
        const std::string doc = R"({
          "group": {"cyclic_orders": [3]},
          "distributions": {"Y": {"probs": {"[0]": "1/3", "[1]": "1/3"}}},
          "command": "analyze"
        })";
        CHECK_THROWS_WITH_AS(parse_request(doc), doctest::Contains("mass != 1"),
                             ValidationError);
    }

    TEST_CASE("rejects out-of-range elements") {
        const std::string doc = R"({
          "group": {"cyclic_orders": [4]},
          "distributions": {"Y": {"probs": {"[5]": "1"}}},
          "command": "analyze"
        })";
        CHECK_THROWS_WITH_AS(parse_request(doc), doctest::Contains("out of range"),
                             ValidationError);
    }

    TEST_CASE("rejects unknown fields, bad commands, malformed documents") {
        CHECK_THROWS_AS(parse_request(R"({"command": "analyze", "extra": 1})"), ValidationError);
        CHECK_THROWS_AS(parse_request(R"({"command": "rotate"})"), ValidationError);
        CHECK_THROWS_AS(parse_request("{"), ValidationError);
        CHECK_THROWS_AS(parse_request(R"({"group": {"cyclic_orders": [4]}})"), ValidationError);
        const std::string negative = R"({
          "group": {"cyclic_orders": [2]},
          "distributions": {"Y": {"probs": {"[0]": "3/2", "[1]": "-1/2"}}},
          "command": "analyze"
        })";
        CHECK_THROWS_AS(parse_request(negative), ValidationError);
        const std::string zero_samples = R"({
          "group": {"cyclic_orders": [2]},
          "distributions": {"Y": {"probs": {"[0]": "1"}}},
          "command": "sample",
          "sample_count": 0
        })";
        CHECK_THROWS_AS(parse_request(zero_samples), ValidationError);
    }

    TEST_CASE("parses rationals exactly") {
        const std::string doc = R"({
          "group": {"cyclic_orders": [2]},
          "distributions": {"Y": {"probs": {"[0]": "333333333333333333333333/1000000000000000000000000",
                                            "[1]": "666666666666666666666667/1000000000000000000000000"}}},
          "command": "analyze"
        })";
        const AnalysisRequest request = parse_request(doc);
        CHECK(request.find_distribution("Y")->prob_at(0) ==
              Rational(Int("333333333333333333333333"), Int("1000000000000000000000000")));
    }
}

TEST_SUITE("run dispatch") {
    TEST_CASE("analyze a point mass at zero") {
        const std::string doc = R"({
          "group": {"cyclic_orders": [4]},
          "distributions": {"Y": {"probs": {"[0]": "1"}}},
          "command": "analyze"
        })";
        const AnalysisReport report = run(parse_request(doc));
        REQUIRE(report.a_subgroup.has_value());
        CHECK(report.a_subgroup->element_indices() == std::vector<std::uint64_t>{0});
        REQUIRE(report.haar_forced.has_value());
        CHECK(!*report.haar_forced);
    }

    TEST_CASE("analyze with X present fills all verdicts") {
        const std::string doc = R"({
          "group": {"cyclic_orders": [4]},
          "distributions": {
            "X": {"probs": {"[0]": "1/2", "[2]": "1/2"}},
            "Y": {"probs": {"[0]": "1/2", "[2]": "1/2"}}
          },
          "command": "analyze"
        })";
        const AnalysisReport report = run(parse_request(doc));
        CHECK(report.is_fixed_point == true);
        CHECK(report.forward_ok == true);
        CHECK(report.converse_ok == true);
        CHECK(report.independence_ok == true);
        CHECK(report.haar_forced == false);
        REQUIRE(report.stabilizer_subgroup.has_value());
        CHECK(report.stabilizer_subgroup->element_indices() ==
              std::vector<std::uint64_t>{0, 2});
    }

    TEST_CASE("analyze full support forces haar") {
        const std::string doc = R"({
          "group": {"cyclic_orders": [5]},
          "distributions": {"Y": {"probs": {"[0]": "1/5", "[1]": "1/5", "[2]": "1/5",
                                            "[3]": "1/5", "[4]": "1/5"}}},
          "command": "analyze"
        })";
        const AnalysisReport report = run(parse_request(doc));
        CHECK(report.haar_forced == true);
    }

    TEST_CASE("fixed-points basis with the oracle flag") {
        const std::string doc = R"({
          "group": {"cyclic_orders": [4]},
          "distributions": {"Y": {"probs": {"[0]": "1/2", "[2]": "1/2"}}},
          "command": "fixed-points",
          "oracle": true
        })";
        const AnalysisReport report = run(parse_request(doc));
        REQUIRE(report.fixed_point_basis.has_value());
        CHECK(report.fixed_point_basis->dimension == 2);
        CHECK(report.fixed_point_basis->coset_size == 2);
        CHECK(report.fixed_point_basis->representatives == std::vector<std::uint64_t>{0, 1});
        REQUIRE(report.oracle.has_value());
        CHECK(report.oracle->matches_lift);
        CHECK(report.oracle->affine.affine_dimension() == 1);
    }

    TEST_CASE("independence on a non-fixed-point pair reports the precondition") {
        const std::string doc = R"({
          "group": {"cyclic_orders": [2]},
          "distributions": {
            "X": {"probs": {"[0]": "1"}},
            "Y": {"probs": {"[1]": "1"}}
          },
          "command": "independence"
        })";
        const AnalysisReport report = run(parse_request(doc));
        REQUIRE(report.precondition_failure.has_value());
        CHECK(report.is_fixed_point == false);
        CHECK(!report.independence_ok.has_value());
    }

    TEST_CASE("missing distributions are rejected") {
        const std::string doc = R"({
          "group": {"cyclic_orders": [2]},
          "distributions": {"Y": {"probs": {"[0]": "1"}}},
          "command": "independence"
        })";
        CHECK_THROWS_AS(run(parse_request(doc)), ValidationError);
    }

    TEST_CASE("circle command classifies and cross-checks the embedding") {
        const std::string doc = R"({
          "command": "circle",
          "circle": {"support": ["1/4", "1/6"]}
        })";
        const AnalysisReport report = run(parse_request(doc));
        REQUIRE(report.circle.has_value());
        CHECK(report.circle->classification.kind == CircleClassification::Kind::FiniteCyclic);
        CHECK(report.circle->classification.modulus == 12);
        CHECK(report.circle->embedding_invariance_ok == true);

        const std::string haar_doc = R"({
          "command": "circle",
          "circle": {"has_nonrational_mass": true}
        })";
        const AnalysisReport haar = run(parse_request(haar_doc));
        CHECK(haar.circle->classification.kind == CircleClassification::Kind::HaarForced);
    }
}

TEST_SUITE("report serialization") {
    TEST_CASE("byte-identical on identical requests") {
        const std::string doc = R"({
          "group": {"cyclic_orders": [2, 3]},
          "distributions": {
            "X": {"probs": {"[0,0]": "1/6", "[0,1]": "1/6", "[0,2]": "1/6",
                             "[1,0]": "1/6", "[1,1]": "1/6", "[1,2]": "1/6"}},
            "Y": {"probs": {"[1,2]": "2/3", "[0,1]": "1/3"}}
          },
          "command": "analyze"
        })";
        const std::string first = run(parse_request(doc)).to_json_text();
        const std::string second = run(parse_request(doc)).to_json_text();
        CHECK(first == second);
        CHECK(!first.empty());

        // reformatting the document must not change the canonical report
        const std::string shuffled = R"({
          "command": "analyze",
          "distributions": {
            "Y": {"probs": {"[0,1]": "2/6", "[1,2]": "2/3"}},
            "X": {"probs": {"[1,2]": "1/6", "[1,1]": "1/6", "[1,0]": "1/6",
                             "[0,2]": "1/6", "[0,1]": "1/6", "[0,0]": "1/6"}}
          },
          "group": {"cyclic_orders": [2, 3]}
        })";
        CHECK(run(parse_request(shuffled)).to_json_text() == first);
    }

    TEST_CASE("sampled runs embed the seed and are reproducible") {
        const std::string doc = R"({
          "group": {"cyclic_orders": [6]},
          "distributions": {
            "X": {"probs": {"[0]": "1/2", "[3]": "1/2"}},
            "Y": {"probs": {"[0]": "1/2", "[3]": "1/2"}}
          },
          "command": "sample",
          "sample_count": 5000,
          "seed": 877
        })";
        const AnalysisReport report = run(parse_request(doc));
        REQUIRE(report.monte_carlo.has_value());
        CHECK(report.monte_carlo->sample_count == 5000);
        CHECK(report.monte_carlo->seed == 877);
        CHECK(report.monte_carlo->compared_to == "X");
        CHECK(to_double(report.monte_carlo->tv) < 0.05);
        CHECK(run(parse_request(doc)).to_json_text() == report.to_json_text());
    }

    TEST_CASE("text rendering mentions the key results") {
        const AnalysisReport report = run(parse_request(kAnalyzeDoc));
        const std::string text = report.to_text();
        CHECK(text.find("A: 2 elements") != std::string::npos);
        CHECK(text.find("haar_forced: false") != std::string::npos);
    }
}

TEST_SUITE("sampling") {
    TEST_CASE("point masses sample themselves") {
        const GroupSpec z5({5});
        const auto table = sample_distribution(Distribution::dirac(z5, z5.element({3})), 200, 7);
        CHECK(table.counts[3] == 200);
        CHECK(table.total == 200);
    }

    TEST_CASE("fixed seeds reproduce counts") {
        const GroupSpec z6({6});
        const Distribution mu(z6, {Rational(1, 2), Rational(1, 4), Rational(1, 8),
                                   Rational(1, 16), Rational(1, 32), Rational(1, 32)});
        const auto a = sample_distribution(mu, 10000, 99);
        const auto b = sample_distribution(mu, 10000, 99);
        CHECK(a.counts == b.counts);
        const auto c = sample_distribution(mu, 10000, 100);
        CHECK(a.counts != c.counts);
    }

    TEST_CASE("large uniform samples land within the Monte Carlo bound") {
        const GroupSpec z12({12});
        const Distribution u = Distribution::uniform(z12);
        const auto table = sample_distribution(u, 200000, 20260810);
        CHECK(to_double(tv_distance(table, u)) <= 0.02);
    }

    TEST_CASE("empirical tv shrinks with more draws for most seeds") {
        const GroupSpec z12({12});
        const Distribution mu(
            z12, {Rational(1, 4), Rational(1, 8), Rational(1, 8), 0, 0, Rational(1, 4), 0, 0, 0,
                  Rational(1, 8), Rational(1, 16), Rational(1, 16)});
        int monotone = 0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const Rational tv3 = tv_distance(sample_distribution(mu, 1000, seed), mu);
            const Rational tv4 = tv_distance(sample_distribution(mu, 10000, seed), mu);
            const Rational tv5 = tv_distance(sample_distribution(mu, 100000, seed), mu);
            if (tv3 > tv4 && tv4 > tv5) ++monotone;
        }
        CHECK(monotone > 10);
    }

    TEST_CASE("empirical shift checks") {
        const GroupSpec z2({2});
        const Distribution d0 = Distribution::dirac(z2, z2.zero());
        CHECK(empirical_shift_check(d0, d0, 500, 3) == 0);

        const Distribution d1 = Distribution::dirac(z2, z2.element({1}));
        CHECK(empirical_shift_check(d0, d1, 1000, 3) == 1);

        const GroupSpec z12({12});
        std::mt19937_64 rng(193);
        const Rational tv = empirical_shift_check(Distribution::uniform(z12),
                                                  testutil::random_distribution(z12, rng),
                                                  20000, 11);
        CHECK(to_double(tv) <= 0.05);
    }

    TEST_CASE("stream seeds differ per label") {
        CHECK(derive_stream_seed(42, "X") != derive_stream_seed(42, "Y"));
        CHECK(derive_stream_seed(42, "X") != derive_stream_seed(43, "X"));
        CHECK(derive_stream_seed(42, "X") == derive_stream_seed(42, "X"));
    }

    TEST_CASE("sample count validation") {
        const GroupSpec z2({2});
        CHECK_THROWS_AS(sample_distribution(Distribution::uniform(z2), 0, 1), ValidationError);
    }
}
