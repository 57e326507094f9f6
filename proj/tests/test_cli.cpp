#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "circpoly/cli.hpp"
#include "circpoly/hilbert.hpp"
#include "circpoly/intmat.hpp"
#include "json.hpp"

using namespace circpoly;
using Json = nlohmann::ordered_json;

namespace {

CliResult run(std::initializer_list<std::string> args) {
    return run_cli(std::vector<std::string>(args));
}

Json out_json(const CliResult& r) { return Json::parse(r.out); }

std::string write_file(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "circpoly_cli_fixtures";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream f(path);
    f << content;
    return path.string();
}

const std::string kOnes3 = write_file("ones3.json", R"([["1","1","1"],["1","1","1"],["1","1","1"]])");
const std::string kId3 = write_file("id3.json", R"([["1","0","0"],["0","1","0"],["0","0","1"]])");
const std::string kId2 = write_file("id2.json", R"([["1","0"],["0","1"]])");

}  // namespace

TEST_CASE("complex literal parsing") {
    CHECK(parse_complex_literal("4") == GaussianRational(Rat(4)));
    CHECK(parse_complex_literal("-7") == GaussianRational(Rat(-7)));
    CHECK(parse_complex_literal("3/2") == GaussianRational(Rat(3, 2)));
    CHECK(parse_complex_literal("8i") == GaussianRational(Rat(0), Rat(8)));
    CHECK(parse_complex_literal("1+2i") == GaussianRational(Rat(1), Rat(2)));
    CHECK(parse_complex_literal("2-i") == GaussianRational(Rat(2), Rat(-1)));
    CHECK(parse_complex_literal("i") == GaussianRational(Rat(0), Rat(1)));
    CHECK(parse_complex_literal("-i") == GaussianRational(Rat(0), Rat(-1)));
    CHECK(parse_complex_literal("+i") == GaussianRational(Rat(0), Rat(1)));
    CHECK(parse_complex_literal("-1.5+0.25i") == GaussianRational(Rat(-3, 2), Rat(1, 4)));
    CHECK(parse_complex_literal("3/2i") == GaussianRational(Rat(0), Rat(3, 2)));
    CHECK(parse_complex_literal("-3/4-5/6i") == GaussianRational(Rat(-3, 4), Rat(-5, 6)));
    CHECK(parse_complex_literal(" 1 + 2i ") == GaussianRational(Rat(1), Rat(2)));

    // leading-zero decimals stay decimal
    CHECK(parse_complex_literal("0.25") == GaussianRational(Rat(1, 4)));
    CHECK(parse_complex_literal("0.0625i") == GaussianRational(Rat(0), Rat(1, 16)));
    CHECK(parse_complex_literal("-0.09") == GaussianRational(Rat(-9, 100)));

    // scientific parts land on the exact dyadic value of the double
    CHECK(parse_complex_literal("1e-3") == GaussianRational(rat_from_double(1e-3)));
    CHECK(parse_complex_literal("1e-3+2e-4i") ==
          GaussianRational(rat_from_double(1e-3), rat_from_double(2e-4)));
    CHECK(parse_complex_literal("0.30901699437494745+0.95105651629515364i") ==
          GaussianRational(parse_rational("0.30901699437494745"),
                           parse_rational("0.95105651629515364")));

    CHECK_THROWS_AS(parse_complex_literal(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex_literal("2+3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex_literal("1+2j"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex_literal("i5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex_literal("1i2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex_literal("nan"), std::invalid_argument);

    auto zs = parse_complex_list("1+2i, 3, -i");
    REQUIRE(zs.size() == 3);
    CHECK(zs[0] == Complex(1, 2));
    CHECK(zs[1] == Complex(3, 0));
    CHECK(zs[2] == Complex(0, -1));
}

TEST_CASE("analyze command") {
    auto r = run({"analyze", "--weights", "6,10,15"});
    REQUIRE(r.exit_code == 0);
    Json j = out_json(r);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "analyze");
    CHECK(j["inputs"]["weights"] == Json::array({"6", "10", "15"}));
    CHECK(j["results"]["minimal"] == true);
    CHECK(j["results"]["d"] == Json::array({"5", "3", "2"}));
    CHECK(j["results"]["cofactor_product"] == "30");
    CHECK(j["results"]["unit_indices"] == Json::array());
    REQUIRE(j["results"]["generators"].size() == 9);
    CHECK(j["results"]["generators"][1]["label"] == "v_1_2");
    CHECK(j["results"]["generators"][1]["a"] == Json::array({"5", "0", "0"}));
    CHECK(j["results"]["generators"][1]["b"] == Json::array({"0", "3", "0"}));
    REQUIRE(j["results"]["basis"].size() == 5);
    CHECK(j["results"]["basis"][0]["label"] == "ell_1");
    CHECK(j["results"]["basis"][3]["label"] == "eta_1");

    auto r2 = run({"analyze", "--weights", "2,3,5"});
    REQUIRE(r2.exit_code == 0);
    Json j2 = out_json(r2);
    CHECK(j2["results"]["minimal"] == false);
    CHECK_FALSE(j2["results"].contains("generators"));

    auto r3 = run({"analyze", "--weights", "4,6"});
    CHECK(r3.exit_code == 2);
    CHECK(r3.err.find("relatively prime") != std::string::npos);

    CHECK(run({"analyze", "--weights", "2,x"}).exit_code == 2);
    CHECK(run({"analyze", "--weights", "2,2,1"}).exit_code == 0);
    Json j4 = out_json(run({"analyze", "--weights", "2,2,1"}));
    CHECK(j4["results"]["unit_indices"] == Json::array({1, 2}));
}

TEST_CASE("faces command") {
    auto r = run({"faces", "--weights", "6,10,15"});
    REQUIRE(r.exit_code == 0);
    Json j = out_json(r);
    CHECK(j["results"]["counts_by_dim"] == Json::array({"1", "9", "18", "15", "6", "1"}));
    CHECK(j["results"]["total"] == "50");
    REQUIRE(j["checks"].size() == 1);
    CHECK(j["checks"][0]["name"] == "counts-match-formula");
    CHECK(j["checks"][0]["pass"] == true);

    Json j2 = out_json(run({"faces", "--weights", "2,3"}));
    CHECK(j2["results"]["counts_by_dim"] == Json::array({"1", "4", "4", "1"}));

    CHECK(run({"faces", "--weights", "2,3,5"}).exit_code == 2);
}

TEST_CASE("faces dot output") {
    auto r = run({"faces", "--weights", "6,10,15", "--dot"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("graph faces {", 0) == 0);
    int nodes = 0, edges = 0;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find(" -- ") != std::string::npos)
            ++edges;
        else if (line.find("\"v_") != std::string::npos)
            ++nodes;
    }
    CHECK(nodes == 9);
    CHECK(edges == 18);
    CHECK(r.out.find("\"v_1_1\" -- \"v_1_2\";") != std::string::npos);

    // deterministic output
    auto r2 = run({"faces", "--weights", "6,10,15", "--dot"});
    CHECK(r.out == r2.out);
}

TEST_CASE("fk command") {
    auto r = run({"fk", "--weights", "6,10,15", "--kernel"});
    REQUIRE(r.exit_code == 0);
    Json j = out_json(r);
    auto& res = j["results"];
    CHECK(res["row_labels"] == Json::array({"eta_1", "eta_2", "ell_1", "ell_2", "ell_3"}));
    REQUIRE(res["column_labels"].size() == 9);

    // identity block on the first 2k-1 columns
    for (int rr = 0; rr < 5; ++rr)
        for (int c = 0; c < 5; ++c)
            CHECK(res["matrix"][rr][c] == (rr == c ? "1" : "0"));

    size_t col = 0;
    while (res["column_labels"][col] != "e_1_3") ++col;
    const std::vector<std::string> expected{"-1", "-1", "5", "3", "2"};
    for (int rr = 0; rr < 5; ++rr) CHECK(res["matrix"][rr][col] == expected[rr]);

    CHECK(res["kernel"]["rank"] == 4);
    REQUIRE(res["kernel"]["basis"].size() == 9);
    REQUIRE(res["kernel"]["basis"][0].size() == 4);

    // reported HNF equals the library value
    IntMat hnf = hermite_normal_form(fk_kernel(build_weight_system({6, 10, 15})));
    for (size_t rr = 0; rr < hnf.size(); ++rr)
        for (size_t c = 0; c < hnf[rr].size(); ++c)
            CHECK(res["kernel"]["hnf"][rr][c] == hnf[rr][c].get_str());

    Json j2 = out_json(run({"fk", "--weights", "2,3", "--kernel"}));
    CHECK(j2["results"]["kernel"]["rank"] == 1);
    CHECK(j2["results"]["kernel"]["basis"] ==
          Json::array({Json::array({"-1"}), Json::array({"3"}), Json::array({"2"}),
                       Json::array({"-1"})}));

    CHECK(run({"fk", "--weights", "2,3,5"}).exit_code == 2);
}

TEST_CASE("bracket jacobi") {
    const std::string growth =
        write_file("growth1.json", R"([["5","1","1"],["1","3","1"],["1","1","2"]])");
    auto r = run({"bracket", "--weights", "6,10,15", "--kind", "epsilon_delta", "--epsilon",
                  kOnes3, "--delta", growth, "--check", "jacobi"});
    REQUIRE(r.exit_code == 0);
    Json j = out_json(r);
    CHECK(j["checks"][0]["pass"] == true);
    CHECK(j["checks"][0]["witness"].is_null());
    CHECK(j["inputs"]["delta"][0] == Json::array({"5", "1", "1"}));

    const std::string viol =
        write_file("viol_delta.json", R"([["0","0","1"],["0","0","0"],["1","0","0"]])");
    auto r2 = run({"bracket", "--weights", "2,2,1", "--kind", "epsilon_delta", "--epsilon",
                   kOnes3, "--delta", viol, "--check", "jacobi"});
    CHECK(r2.exit_code == 1);
    Json j2 = out_json(r2);
    CHECK(j2["checks"][0]["pass"] == false);
    CHECK(j2["checks"][0]["witness"]["reason"] == "triplet");
    CHECK(j2["checks"][0]["witness"]["p"] == 1);
    CHECK(j2["checks"][0]["witness"]["q"] == 2);
    CHECK(j2["checks"][0]["witness"]["r"] == 3);

    CHECK(run({"bracket", "--weights", "2,3", "--kind", "standard", "--check", "jacobi"})
              .exit_code == 0);
    CHECK(run({"bracket", "--weights", "2,2,1", "--kind", "quadratic", "--epsilon", kOnes3,
               "--check", "jacobi"})
              .exit_code == 0);
    CHECK(run({"bracket", "--weights", "1,1,1", "--kind", "mixed", "--epsilon", kId3, "--h",
               "1,2", "--check", "jacobi"})
              .exit_code == 0);

    // with a live h and a non-unit index coupled by eps the lift jacobiator
    // does not vanish; the witness triplet is frozen
    auto r3 = run({"bracket", "--weights", "2,2,1", "--kind", "mixed", "--epsilon", kId3,
                   "--h", "1,2", "--check", "jacobi"});
    CHECK(r3.exit_code == 1);
    Json j3 = out_json(r3);
    CHECK(j3["checks"][0]["witness"]["pair_a"] == Json::array({1, 3}));
    CHECK(j3["checks"][0]["witness"]["pair_b"] == Json::array({2, 3}));
    CHECK(j3["checks"][0]["witness"]["pair_c"] == Json::array({3, 1}));
}

TEST_CASE("bracket relate") {
    // quadratic lifts push forward exactly on any system
    CHECK(run({"bracket", "--weights", "6,10,15", "--kind", "quadratic", "--epsilon", kOnes3,
               "--check", "relate"})
              .exit_code == 0);
    CHECK(run({"bracket", "--weights", "2,2,1", "--kind", "epsilon_delta", "--epsilon", kOnes3,
               "--check", "relate"})
              .exit_code == 0);
    // all-unit system: every kind is exactly related
    const std::string id3b = kId3;
    CHECK(run({"bracket", "--weights", "1,1,1", "--kind", "face", "--epsilon", id3b, "--h",
               "1,2", "--check", "relate"})
              .exit_code == 0);
    CHECK(run({"bracket", "--weights", "1,1", "--kind", "linear", "--epsilon", kId2, "--check",
               "relate"})
              .exit_code == 0);

    // a face over a non-unit chain is not exactly related; witness is frozen
    auto r = run({"bracket", "--weights", "2,2,1", "--kind", "face", "--epsilon", kId3, "--h",
                  "1,2", "--check", "relate"});
    CHECK(r.exit_code == 1);
    Json j = out_json(r);
    CHECK(j["checks"][0]["pass"] == false);
    CHECK(j["checks"][0]["witness"]["pair_a"] == Json::array({1, 3}));
    CHECK(j["checks"][0]["witness"]["pair_b"] == Json::array({3, 1}));

    // nonzero delta cannot be matched
    const std::string growth =
        write_file("growth1.json", R"([["5","1","1"],["1","3","1"],["1","1","2"]])");
    CHECK(run({"bracket", "--weights", "6,10,15", "--kind", "epsilon_delta", "--epsilon",
               kOnes3, "--delta", growth, "--check", "relate"})
              .exit_code == 2);
    CHECK(run({"bracket", "--weights", "2,3", "--kind", "standard", "--check", "relate"})
              .exit_code == 2);
}

TEST_CASE("bracket reality") {
    CHECK(run({"bracket", "--weights", "2,3", "--kind", "quadratic", "--epsilon", kId2,
               "--check", "reality"})
              .exit_code == 0);
    const std::string asym = write_file("asym2.json", R"([["0","1"],["0","0"]])");
    auto r = run({"bracket", "--weights", "2,3", "--kind", "quadratic", "--epsilon", asym,
                  "--check", "reality"});
    CHECK(r.exit_code == 1);
    Json j = out_json(r);
    CHECK(j["checks"][0]["witness"]["pair_a"] == Json::array({1, 1}));
    CHECK(j["checks"][0]["witness"]["pair_b"] == Json::array({1, 2}));

    CHECK(run({"bracket", "--weights", "2,3", "--kind", "standard", "--check", "reality"})
              .exit_code == 2);
}

TEST_CASE("bracket intertwine") {
    const std::string ea = write_file("eps_a.json", R"([["1","1","0"],["1","1","0"],["0","0","0"]])");
    const std::string eb = write_file("eps_b.json", R"([["0","0","0"],["0","0","0"],["0","0","1"]])");
    // both families live: the circular identity fails at the frozen triplet
    auto r = run({"bracket", "--weights", "2,2,1", "--check", "intertwine", "--epsilon-a", ea,
                  "--epsilon-b", eb});
    CHECK(r.exit_code == 1);
    Json j = out_json(r);
    CHECK(j["checks"][0]["witness"]["pair_a"] == Json::array({1, 3}));
    CHECK(j["checks"][0]["witness"]["pair_b"] == Json::array({2, 3}));
    CHECK(j["checks"][0]["witness"]["pair_c"] == Json::array({3, 1}));

    const std::string ea11 = write_file("eps_a11.json", R"([["1","0"],["0","0"]])");
    const std::string eb11 = write_file("eps_b11.json", R"([["0","0"],["0","2"]])");
    CHECK(run({"bracket", "--weights", "1,1", "--check", "intertwine", "--epsilon-a", ea11,
               "--epsilon-b", eb11})
              .exit_code == 0);

    // overlapping supports are rejected
    CHECK(run({"bracket", "--weights", "1,1", "--check", "intertwine", "--epsilon-a", ea11,
               "--epsilon-b", ea11})
              .exit_code == 2);
    CHECK(run({"bracket", "--weights", "1,1", "--check", "intertwine", "--epsilon-a", ea11})
              .exit_code == 2);
}

TEST_CASE("bracket invariance") {
    CHECK(run({"bracket", "--weights", "2,3", "--kind", "standard", "--check", "invariance"})
              .exit_code == 0);
    const std::string growth =
        write_file("growth_u.json", R"([["1","1","1"],["1","1","1"],["1","1","2"]])");
    CHECK(run({"bracket", "--weights", "2,2,1", "--kind", "epsilon_delta", "--epsilon", kOnes3,
               "--delta", growth, "--check", "invariance"})
              .exit_code == 0);
    CHECK(run({"bracket", "--weights", "2,3", "--kind", "quadratic", "--epsilon", kId2,
               "--check", "invariance"})
              .exit_code == 2);
}

TEST_CASE("bracket input validation") {
    CHECK(run({"bracket", "--weights", "2,3", "--check", "jacobi"}).exit_code == 2);
    CHECK(run({"bracket", "--weights", "2,3", "--kind", "nope", "--epsilon", kId2, "--check",
               "jacobi"})
              .exit_code == 2);
    CHECK(run({"bracket", "--weights", "2,3", "--kind", "epsilon", "--check", "jacobi"})
              .exit_code == 2);
    CHECK(run({"bracket", "--weights", "2,3", "--kind", "epsilon", "--epsilon",
               "/nonexistent.json", "--check", "jacobi"})
              .exit_code == 2);
    const std::string bad = write_file("bad.json", "[[1,2],[3");
    CHECK(run({"bracket", "--weights", "2,3", "--kind", "epsilon", "--epsilon", bad, "--check",
               "jacobi"})
              .exit_code == 2);
    const std::string wrong = write_file("wrong_shape.json", R"([["1","0"],["0","1"]])");
    CHECK(run({"bracket", "--weights", "6,10,15", "--kind", "epsilon", "--epsilon", wrong,
               "--check", "jacobi"})
              .exit_code == 2);
    const std::string frac = write_file("frac.json", R"([["1","1/2"],["1/2","1"]])");
    CHECK(run({"bracket", "--weights", "2,3", "--kind", "epsilon_delta", "--epsilon", kId2,
               "--delta", frac, "--check", "jacobi"})
              .exit_code == 2);
    CHECK(run({"bracket", "--weights", "2,3", "--kind", "quadratic", "--epsilon", kId2, "--h",
               "1", "--check", "jacobi"})
              .exit_code == 2);
    CHECK(run({"bracket", "--weights", "2,2,1", "--kind", "face", "--epsilon", kId3, "--h",
               "0", "--check", "jacobi"})
              .exit_code == 2);
    CHECK(run({"bracket", "--weights", "2,2,1", "--kind", "face", "--epsilon", kId3, "--h",
               "4", "--check", "jacobi"})
              .exit_code == 2);
    // h = 3 names a non-unit index on (2,2,1)
    CHECK(run({"bracket", "--weights", "2,2,1", "--kind", "face", "--epsilon", kId3, "--h",
               "3", "--check", "jacobi"})
              .exit_code == 2);
    CHECK(run({"bracket", "--weights", "2,3", "--kind", "standard", "--check", "nope"})
              .exit_code == 2);
    // integer JSON entries are accepted
    const std::string ints = write_file("ints.json", R"([[1,0],[0,1]])");
    CHECK(run({"bracket", "--weights", "2,3", "--kind", "quadratic", "--epsilon", ints,
               "--check", "reality"})
              .exit_code == 0);
}

TEST_CASE("orbit command") {
    auto r = run({"orbit", "--weights", "2,3", "--z", "1,1", "--w",
                  "0.30901699437494745+0.95105651629515364i,"
                  "-0.3090169943749474+0.95105651629515364i"});
    REQUIRE(r.exit_code == 0);
    Json j = out_json(r);
    CHECK(j["results"]["same_orbit"] == true);
    CHECK(j["results"]["u_z"][0][0]["re"] == 1.0);
    CHECK(j["results"]["u_z"].size() == 2);

    Json j2 = out_json(run({"orbit", "--weights", "2,3", "--z", "1,0", "--w", "0,1"}));
    CHECK(j2["results"]["same_orbit"] == false);

    CHECK(run({"orbit", "--weights", "2,3", "--z", "1,0", "--w", "0,1"}).exit_code == 0);
    CHECK(run({"orbit", "--weights", "2,3", "--z", "1,2,3", "--w", "0,1"}).exit_code == 2);
    CHECK(run({"orbit", "--weights", "2,3"}).exit_code == 2);
    CHECK(run({"orbit", "--weights", "2,3,5", "--z", "1,1,1", "--w", "1,1,1"}).exit_code == 2);
}

TEST_CASE("orbit reconstruction") {
    const std::string hom = write_file("hom23.json", R"([["4", "8i"], ["-8i", "1"]])");
    auto r = run({"orbit", "--weights", "2,3", "--reconstruct", hom});
    REQUIRE(r.exit_code == 0);
    Json j = out_json(r);
    REQUIRE(j["checks"].size() == 2);
    CHECK(j["checks"][0]["name"] == "hom-conditions");
    CHECK(j["checks"][0]["pass"] == true);
    CHECK(j["checks"][1]["name"] == "reconstruction-round-trip");
    CHECK(j["checks"][1]["pass"] == true);
    const double re = j["results"]["representative"][0]["re"].get<double>();
    const double im = j["results"]["representative"][0]["im"].get<double>();
    CHECK(std::abs(std::abs(Complex(re, im)) - 2.0) < 1e-12);

    const std::string bad = write_file("hom23_bad.json", R"([["4", "8i"], ["8i", "1"]])");
    auto r2 = run({"orbit", "--weights", "2,3", "--reconstruct", bad});
    CHECK(r2.exit_code == 1);
    Json j2 = out_json(r2);
    CHECK(j2["checks"][0]["pass"] == false);
    CHECK(j2["checks"][0]["witness"]["reason"] == "conjugate_symmetry");
}

TEST_CASE("json output round trips") {
    for (auto args : {std::vector<std::string>{"fk", "--weights", "6,10,15", "--kernel"},
                      {"analyze", "--weights", "2,2,1"},
                      {"faces", "--weights", "6,10,15,30"}}) {
        auto r = run_cli(args);
        REQUIRE(r.exit_code == 0);
        Json j = Json::parse(r.out);
        CHECK(j.dump(2) + "\n" == r.out);
        CHECK(j["schema"] == 1);
        // identical invocation, identical bytes
        CHECK(run_cli(args).out == r.out);
    }
}

TEST_CASE("help and parse errors") {
    auto r = run({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("analyze") != std::string::npos);
    CHECK(r.out.find("orbit") != std::string::npos);

    CHECK(run({}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"analyze"}).exit_code == 2);
    auto r2 = run({"bracket", "--weights", "2,3"});
    CHECK(r2.exit_code == 2);
    CHECK(!r2.err.empty());
}
