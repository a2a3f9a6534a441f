#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "qcb/criteria.hpp"
#include "qcb/errors.hpp"
#include "qcb/linalg.hpp"
#include "qcb/state_io.hpp"
#include "support.hpp"

using namespace qcb;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const char* name) {
    const fs::path dir = fs::temp_directory_path() / "qcb_io_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write_text(const fs::path& p, const std::string& body) {
    std::ofstream os(p);
    os << body;
}

// Minimal valid 1x2 document builder used by the rejection tests.
std::string doc_with_trace(double t00, double t11) {
    nlohmann::json doc = {{"format_version", 1},
                          {"dim_a", 1},
                          {"dim_b", 2},
                          {"real_part", {{t00, 0.0}, {0.0, t11}}},
                          {"imag_part", {{0.0, 0.0}, {0.0, 0.0}}}};
    return doc.dump();
}

}  // namespace

TEST_CASE("save/load round-trips states bit-exactly") {
    const fs::path p = temp_file("roundtrip.json");

    const BipartiteState bell = density_from_pure(maximally_entangled(2));
    save_state(bell, p);
    CHECK(max_abs_diff(load_state(p).matrix(), bell.matrix()) <= 1e-15);

    std::mt19937_64 rng(71);
    const BipartiteState random = test::random_density(2, 3, rng);
    save_state(random, p);  // overwrites the previous content
    const BipartiteState back = load_state(p);
    CHECK(back.dim_a() == 2);
    CHECK(back.dim_b() == 3);
    CHECK(max_abs_diff(back.matrix(), random.matrix()) == 0.0);
}

TEST_CASE("tiles state survives the file boundary") {
    const fs::path p = temp_file("tiles.json");
    save_state(tiles_upb(), p);
    const CriteriaScores s = criteria_scores(load_state(p));
    CHECK(s.realignment_norm == doctest::Approx(1.087).epsilon(0.005));
}

TEST_CASE("saved isotropic document records the declared dimensions") {
    const fs::path p = temp_file("iso.json");
    save_state(isotropic(3, 0.5), p);
    std::ifstream is(p);
    const nlohmann::json doc = nlohmann::json::parse(is);
    CHECK(doc.at("dim_a").get<int>() == 3);
    CHECK(doc.at("dim_b").get<int>() == 3);
    CHECK(doc.at("format_version").get<int>() == 1);
    CHECK(fidelity_with_mes(load_state(p)) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("malformed documents raise parse errors") {
    const fs::path p = temp_file("bad.json");

    write_text(p, "this is not json");
    CHECK_THROWS_AS(load_state(p), parse_error);

    write_text(p, R"({"format_version": 1, "dim_a": 2})");
    CHECK_THROWS_WITH_AS(load_state(p), doctest::Contains("dim_b"), parse_error);

    write_text(p, R"({"format_version": 7, "dim_a": 1, "dim_b": 1,
                      "real_part": [[1.0]], "imag_part": [[0.0]]})");
    CHECK_THROWS_WITH_AS(load_state(p), doctest::Contains("format_version"), parse_error);

    CHECK_THROWS_AS(load_state(temp_file("does_not_exist.json")), parse_error);
}

TEST_CASE("invalid states raise validation errors naming the invariant") {
    const fs::path p = temp_file("invalid.json");

    write_text(p, doc_with_trace(0.5, 0.48));  // trace 0.98
    CHECK_THROWS_WITH_AS(load_state(p), doctest::Contains("trace"), validation_error);

    // wrong matrix shape for the declared dims
    write_text(p, R"({"format_version": 1, "dim_a": 2, "dim_b": 2,
                      "real_part": [[1.0]], "imag_part": [[0.0]]})");
    CHECK_THROWS_WITH_AS(load_state(p), doctest::Contains("dimension"), validation_error);

    // non-Hermitian imaginary diagonal
    write_text(p, R"({"format_version": 1, "dim_a": 1, "dim_b": 2,
                      "real_part": [[0.5, 0.0], [0.0, 0.5]],
                      "imag_part": [[0.0, 0.5], [0.0, 0.0]]})");
    CHECK_THROWS_WITH_AS(load_state(p), doctest::Contains("hermitian"), validation_error);

    // Hermitian, unit trace, indefinite
    write_text(p, doc_with_trace(1.5, -0.5));
    CHECK_THROWS_WITH_AS(load_state(p), doctest::Contains("psd"), validation_error);
}

TEST_CASE("write_report text mode") {
    const EntanglementReport sep =
        analyze(BipartiteState(3, 3, (1.0 / 9.0) * ComplexMatrix::identity(9)), "mixed");
    const std::string text = write_report(sep, ReportFormat::text);
    CHECK(text.find("entangled:               no") != std::string::npos);
    CHECK(text.find("label:                   mixed") != std::string::npos);

    const std::string tiles_text = write_report(analyze(tiles_upb(), "tiles"), ReportFormat::text);
    CHECK(tiles_text.find("entangled:               yes") != std::string::npos);
    CHECK(tiles_text.find("bound_source:            realignment") != std::string::npos);
}

TEST_CASE("write_report csv row matches the documented column order") {
    const std::string row = write_report(analyze(tiles_upb(), "tiles"), ReportFormat::csv_row);
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = row.find(',', pos);
        fields.push_back(row.substr(pos, comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    REQUIRE(fields.size() == 10);
    CHECK(fields[0] == "tiles");
    CHECK(fields[1] == "3");
    CHECK(fields[2] == "3");
    CHECK(std::stod(fields[3]) == doctest::Approx(1.0));           // ppt_norm
    CHECK(std::stod(fields[4]) == doctest::Approx(1.0874).epsilon(1e-3));
    CHECK(fields[5] == "0.000000");                                // negativity, not "-0.000000"
    CHECK(std::stod(fields[6]) == doctest::Approx(0.0874).epsilon(1e-2));
    CHECK(std::stod(fields[7]) == doctest::Approx(0.0505).epsilon(1e-2));
    CHECK(fields[8] == "realignment");
    CHECK(fields[9] == "true");

    const std::string header = csv_report_header();
    CHECK(header.find("label,dim_a,dim_b,ppt_norm") == 0);
}

TEST_CASE("write_report structured mode parses back to equal values") {
    const EntanglementReport report = analyze(density_from_pure(maximally_entangled(2)), "bell");
    const nlohmann::json doc =
        nlohmann::json::parse(write_report(report, ReportFormat::structured));
    CHECK(doc.at("label").get<std::string>() == "bell");
    CHECK(doc.at("ppt_norm").get<double>() == report.scores.ppt_norm);
    CHECK(doc.at("realignment_norm").get<double>() == report.scores.realignment_norm);
    CHECK(doc.at("negativity").get<double>() == report.scores.negativity);
    CHECK(doc.at("concurrence_lower_bound").at("value").get<double>() == report.bound.value);
    CHECK(doc.at("concurrence_lower_bound").at("source").get<std::string>() == "tie");
    CHECK(doc.at("eof_lower_bound").get<double>() == *report.eof_lower_bound);
    CHECK(doc.at("entangled").get<bool>() == report.entangled_verdict);
}
