#include "doctest.h"

#include "kz/serialize.hpp"

using namespace kz;

namespace {

const KZSystem& s3() {
    static const KZSystem sys(3, {Rational(0), Rational(1)}, -1);
    return sys;
}

} // namespace

TEST_CASE("solution documents round-trip bit-for-bit") {
    const FundamentalSolution fund = build_fundamental(s3());
    const SolutionDocument doc = make_document(fund, s3());
    const std::string once = dump(to_json(doc));
    const SolutionDocument reparsed = solution_from_json(nlohmann::json::parse(once));
    const std::string twice = dump(to_json(reparsed));
    CHECK(once == twice);
    CHECK(reparsed.matrix() == to_matrix(fund));

    // The rho = +1 document round-trips the same way.
    const KZSystem plus(3, {Rational(0), Rational(1)}, 1);
    const MatrixF y = rho_plus_fundamental(plus);
    const SolutionDocument plus_doc = make_document(y, plus);
    const std::string p_once = dump(to_json(plus_doc));
    CHECK(solution_from_json(nlohmann::json::parse(p_once)).matrix() == y);
    CHECK(dump(to_json(solution_from_json(nlohmann::json::parse(p_once)))) == p_once);
}

TEST_CASE("single-column documents") {
    const PartialFractionSolution y3 = build_yn(s3());
    const SolutionDocument doc = make_document(y3, s3());
    const std::string text = dump(to_json(doc));
    const SolutionDocument back = solution_from_json(nlohmann::json::parse(text));
    CHECK(dump(to_json(back)) == text);
    CHECK(back.matrix() == to_matrix(y3));
    // A column document passes verification end to end.
    CHECK(verify_ode(back.system(), back.matrix()).all_ok());
}

TEST_CASE("system documents") {
    const auto j = nlohmann::json::parse(R"({"n": 3, "points": ["0", "1"], "rho": -1})");
    const KZSystem sys = system_from_json(j);
    CHECK(sys.n == 3);
    CHECK(sys.rho == -1);
    CHECK(sys.points[1] == Rational(1));

    CHECK_THROWS_AS(
        system_from_json(nlohmann::json::parse(R"({"n": 3, "points": ["1/2", "1/2"], "rho": 1})")),
        input_error);
    try {
        system_from_json(nlohmann::json::parse(R"({"n": 3, "points": ["3", "3"], "rho": 1})"));
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("indices 1,2") != std::string::npos);
    }
    CHECK_THROWS_AS(system_from_json(nlohmann::json::parse(R"({"points": ["0","1"], "rho": 1})")),
                    input_error);
    CHECK_THROWS_AS(
        system_from_json(nlohmann::json::parse(R"({"n": 3, "points": ["0","x"], "rho": 1})")),
        input_error);
    CHECK_THROWS_AS(
        system_from_json(nlohmann::json::parse(R"({"n": 3, "points": ["0","1"], "rho": 4})")),
        input_error);
}

TEST_CASE("document validation") {
    const FundamentalSolution fund = build_fundamental(s3());
    auto j = to_json(make_document(fund, s3()));

    auto broken = j;
    broken["schema"] = "kz-rational/999";
    CHECK_THROWS_AS(solution_from_json(nlohmann::json(broken)), input_error);

    broken = j;
    broken["residues"].erase(1);
    CHECK_THROWS_AS(solution_from_json(nlohmann::json(broken)), input_error);

    broken = j;
    broken["residues"][0][0][0] = "not-a-number";
    CHECK_THROWS_AS(solution_from_json(nlohmann::json(broken)), input_error);
}

TEST_CASE("report and verdict serialization carry machine-readable witnesses") {
    FundamentalSolution fund = build_fundamental(s3());
    fund.columns[0].residues[0](0, 0) += Rational(1);
    const VerificationReport rep = verify_ode(s3(), to_matrix(fund));
    const auto j = to_json(rep);
    CHECK(j["ode_residual_zero"] == false);
    REQUIRE(!j["details"].empty());
    bool witness = false;
    for (const auto& d : j["details"])
        if (d.contains("entry") && d.contains("residual_num") && d.contains("residual_den"))
            witness = true;
    CHECK(witness);

    const auto g = to_json(rationality_gate(1, 2));
    CHECK(g["verdict"] == "no_rational_fundamental");
    CHECK(g["lambda_squared"] == "3");
    CHECK(to_json(rationality_gate(2, 2))["verdict"] == "inconclusive");
}

TEST_CASE("text rendering") {
    const FundamentalSolution fund = build_fundamental(s3());
    const std::string text = to_text(to_matrix(fund));
    CHECK(text.find("/") != std::string::npos);
    CHECK(to_text(rationality_gate(1, 2)).find("no rational fundamental") != std::string::npos);
}
