#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "arcsin_bounds/bound_family.hpp"
#include "arcsin_bounds/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace asinb;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        rows.push_back(fields);
    }
    return rows;
}

}  // namespace

TEST_CASE("parse_grid") {
    const auto g = cli::parse_grid("0:1:11", false);
    CHECK(g.start == 0.0);
    CHECK(g.end == 1.0);
    CHECK(g.count == 11);
    CHECK(cli::parse_grid("1e6", false).count == 1000000);
    CHECK(cli::parse_grid("0.1:0.9:5", true).spacing == Spacing::Chebyshev);
    CHECK_THROWS_AS((void)cli::parse_grid("0:1", false), cli::UsageError);
    CHECK_THROWS_AS((void)cli::parse_grid("1:0:5", false), cli::UsageError);
    CHECK_THROWS_AS((void)cli::parse_grid("0:1:2.5", false), cli::UsageError);
    CHECK_THROWS_AS((void)cli::parse_grid("abc", false), cli::UsageError);
}

TEST_CASE("format_number") {
    CHECK(cli::format_number(0.5, 17) == "0.5");
    CHECK(cli::format_number(0.1, 17) == "0.10000000000000001");
    CHECK(cli::format_number(0.1, 3) == "0.1");
}

TEST_CASE("table rows and values") {
    const auto r =
        invoke({"table", "--bounds", "shafer-fink-lower,optimal", "--grid", "0:1:11", "--format", "csv"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.out.find('\r') == std::string::npos);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0] == std::vector<std::string>{"x", "arcsin_ref", "shafer-fink-lower",
                                              "shafer-fink-lower_err", "optimal", "optimal_err"});
    CHECK(rows[1][0] == "0");
    CHECK(rows[11][0] == "1");
    CHECK(rows[1][2] == "0");
    CHECK(rows[1][4] == "0");

    const auto& half = rows[6];
    REQUIRE(half[0] == "0.5");
    CHECK(std::strtod(half[2].c_str(), nullptr) == doctest::Approx(0.52337289056102831688).epsilon(1e-15));
    CHECK(std::strtod(half[4].c_str(), nullptr) == doctest::Approx(0.52349872397530849451).epsilon(1e-15));
}

TEST_CASE("table CSV round-trips bit for bit at precision 17") {
    const auto r = invoke({"table", "--bounds", "all", "--grid", "0:1:257"});
    REQUIRE(r.code == cli::kExitOk);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 258);
    const auto& header = rows[0];
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double x = std::strtod(rows[i][0].c_str(), nullptr);
        CHECK(std::strtod(rows[i][1].c_str(), nullptr) == arcsin_ref(x));
        for (std::size_t c = 2; c < header.size(); c += 2) {
            const auto id = parse_bound_id(header[c]);
            REQUIRE(id.has_value());
            CHECK(std::strtod(rows[i][c].c_str(), nullptr) == eval_bound(*id, x));
        }
    }
}

TEST_CASE("table JSON carries the schema version") {
    const auto r = invoke({"table", "--bounds", "optimal", "--grid", "0:1:3", "--format", "json"});
    REQUIRE(r.code == cli::kExitOk);
    const auto doc = json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["rows"].size() == 3);
    CHECK(doc["rows"][2]["optimal"].get<double>() == eval_bound(BoundId::Optimal, 1.0));
}

TEST_CASE("usage errors exit 2") {
    CHECK(invoke({}).code == cli::kExitUsage);
    CHECK(invoke({"frobnicate"}).code == cli::kExitUsage);
    const auto bad_id = invoke({"table", "--bounds", "nope"});
    CHECK(bad_id.code == cli::kExitUsage);
    CHECK(bad_id.err.find("nope") != std::string::npos);
    CHECK(invoke({"table", "--precision", "18"}).code == cli::kExitUsage);
    CHECK(invoke({"table", "--precision", "0"}).code == cli::kExitUsage);
    CHECK(invoke({"table", "--format", "xml"}).code == cli::kExitUsage);
    CHECK(invoke({"table", "--grid", "0:2:5"}).code == cli::kExitUsage);
    CHECK(invoke({"verify", "--alpha", "0"}).code == cli::kExitUsage);
    CHECK(invoke({"verify", "--alpha", "-1"}).code == cli::kExitUsage);
    CHECK(invoke({"locate-min", "--alpha", "2"}).code == cli::kExitUsage);
    CHECK(invoke({"locate-min", "--alpha", "1.5"}).code == cli::kExitUsage);
    CHECK(invoke({"compare", "optimal", "shafer-fink-upper"}).code == cli::kExitUsage);
    CHECK(invoke({"compare", "optimal", "bogus"}).code == cli::kExitUsage);
    CHECK(invoke({"best-alpha", "1"}).code == cli::kExitUsage);
    CHECK(invoke({"bench", "--reps", "0"}).code == cli::kExitUsage);
}

TEST_CASE("verify") {
    const auto two = invoke({"verify", "--alpha", "2", "--grid", "1e6"});
    CHECK(two.code == cli::kExitOk);
    const auto doc = json::parse(two.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["passed"] == true);

    const auto interior = invoke({"verify", "--alpha", "1.9", "--grid", "1e5"});
    CHECK(interior.code == cli::kExitOk);
    const auto checks = json::parse(interior.out)["checks"];
    bool saw_minimum = false;
    for (const auto& c : checks) {
        if (c["check"].get<std::string>().find("interior minimum") != std::string::npos) saw_minimum = true;
    }
    CHECK(saw_minimum);

    CHECK(invoke({"verify", "--alpha", "2,3,1.2", "--grid", "1e4"}).code == cli::kExitOk);
    // A negative tolerance demands strict slack, which x = 0 cannot provide.
    CHECK(invoke({"verify", "--alpha", "2", "--grid", "1e3", "--tol", "-1e-3"}).code ==
          cli::kExitCheckFailed);
}

TEST_CASE("compare verdicts") {
    const auto dom = json::parse(invoke({"compare", "optimal", "shafer-fink-lower"}).out);
    CHECK(dom["verdict"] == "A_DOMINATES");

    const auto cross = invoke({"compare", "optimal", "zhu-lower-2"});
    CHECK(cross.code == cli::kExitOk);
    const auto doc = json::parse(cross.out);
    CHECK(doc["verdict"] == "CROSSING");
    REQUIRE(doc["crossings"].size() >= 1);
    const double lo = doc["crossings"][0]["lo"];
    const double hi = doc["crossings"][0]["hi"];
    CHECK(hi - lo <= 1e-10);
    CHECK(lo <= 0.99879963237896062874);
    CHECK(hi >= 0.99879963237896062874);

    const auto self = json::parse(invoke({"compare", "zhu-lower-1", "zhu-lower-1"}).out);
    CHECK(self["verdict"] == "A_DOMINATES");
    CHECK(self["max_gap"].get<double>() == 0.0);
}

TEST_CASE("locate-min") {
    const auto r = invoke({"locate-min", "--alpha", "1.9"});
    REQUIRE(r.code == cli::kExitOk);
    const auto doc = json::parse(r.out);
    const double x0 = doc["x0"];
    CHECK(x0 > 0.531);
    CHECK(x0 < 1.0);
    CHECK(doc["f_min"].get<double>() >= 4 * (1 - 1 / 3.61));

    const auto m = json::parse(invoke({"locate-min", "--alpha", "1.76"}).out);
    CHECK(std::fabs(m["f_min"].get<double>() - m["f_min_closed_form"].get<double>()) <= 1e-10);
}

TEST_CASE("best-alpha") {
    const auto r = invoke({"best-alpha", "0.5", "--format", "csv"});
    REQUIRE(r.code == cli::kExitOk);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(std::strtod(rows[1][2].c_str(), nullptr) ==
          doctest::Approx(1.9696155060244161187).epsilon(1e-15));
    CHECK(parse_csv(invoke({"best-alpha", "--grid", "0.1:0.9:9"}).out).size() == 10);
}

TEST_CASE("bench structure") {
    const auto r = invoke({"bench", "--bounds", "shafer-fink-lower,optimal", "--grid", "0:1:256", "--reps", "5"});
    REQUIRE(r.code == cli::kExitOk);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[1][0] == "shafer-fink-lower");
    CHECK(rows[2][0] == "optimal");
    CHECK(rows[3][0] == "arcsin-ref");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::strtod(rows[i][1].c_str(), nullptr) > 0.0);
        CHECK(rows[i][4] == "5");
    }
}
