#include <doctest.h>

#include <json.hpp>
#include <algorithm>
#include <set>
#include <sstream>

#include "theta/catalog.hpp"
#include "theta/cli.hpp"

using namespace theta;
using namespace theta::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("complex literals")
{
    CHECK(parse_complex("1.5") == Complex{1.5, 0.0});
    CHECK(parse_complex("-2") == Complex{-2.0, 0.0});
    CHECK(parse_complex("1i") == Complex{0.0, 1.0});
    CHECK(parse_complex("-0.5i") == Complex{0.0, -0.5});
    CHECK(parse_complex("0.3+0.8i") == Complex{0.3, 0.8});
    CHECK(parse_complex("0.3-0.8i") == Complex{0.3, -0.8});
    CHECK(parse_complex("−1i") == Complex{0.0, -1.0});
    CHECK(parse_complex("0.1−2i") == Complex{0.1, -2.0});
    for (const char* bad : {"", "i", "abc", "1e3", "1+i", "1+2", "1.5.2", "1+2j", " 1", "1+2i "})
        CHECK_MESSAGE(!parse_complex(bad), bad);

    CHECK(format_complex({1.0864348112133082, 0.0}) == "1.0864348112133082");
    CHECK(format_complex({0.0, 2.0}) == "2i");
    CHECK(format_complex({0.5, -0.25}) == "0.5-0.25i");
    for (Complex z : {Complex{0.1, 0.7}, Complex{-3.25, 0.001}, Complex{0.0, -0.6}})
        CHECK(parse_complex(format_complex(z)) == z);
}

TEST_CASE("eval")
{
    CHECK(run({"eval", "--r", "1", "--u", "0", "--tau", "1i"}).out == "0\n");
    const Run r3 = run({"eval", "--r", "3", "--u", "0", "--tau", "1i"});
    CHECK(r3.code == kOk);
    CHECK(r3.out == "1.0864348112133082\n");

    const Run bad_tau = run({"eval", "--r", "3", "--u", "0", "--tau", "−1i"});
    CHECK(bad_tau.code == kUsage);
    CHECK(bad_tau.err.find("--tau") != std::string::npos);
    const Run bad_u = run({"eval", "--r", "3", "--u", "x", "--tau", "1i"});
    CHECK(bad_u.code == kUsage);
    CHECK(bad_u.err.find("--u") != std::string::npos);
    CHECK(run({"eval", "--r", "5", "--u", "0", "--tau", "1i"}).code == kUsage);
    CHECK(run({"eval", "--u", "0", "--tau", "1i"}).code == kUsage);
    CHECK(run({}).code == kUsage);

    const Run prod = run({"eval", "--r", "2", "--u", "0.25", "--tau", "1i", "--product"});
    CHECK(prod.out.find("series:") != std::string::npos);
    CHECK(prod.out.find("product:") != std::string::npos);
    CHECK(prod.out.find("difference:") != std::string::npos);

    const Run js = run({"eval", "--r", "3", "--u", "0", "--tau", "1i", "--json"});
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["value"][0].get<double>() == 1.0864348112133082);

    // Small Im tau goes through the reduction; the series alone would run out of terms.
    CHECK(run({"eval", "--r", "3", "--u", "0.3", "--tau", "0.001+0.002i"}).code == kOk);
    CHECK(run({"eval", "--char", "0.5,0.5", "--u", "0", "--tau", "1i"}).code == kOk);
    CHECK(run({"eval", "--r", "3", "--u", "0", "--tau", "1i", "--big-theta"}).out ==
          "1.0864348112133082\n");
}

TEST_CASE("verify exit codes and reports")
{
    CHECK(run({"verify", "--id", "NO.SUCH"}).code == kUnknownId);
    CHECK(run({"verify"}).code == kUsage);
    CHECK(run({"verify", "--id", "B.I.2", "--trials", "0"}).code == kUsage);

    const Run ok = run({"verify", "--id", "B.I.2", "--trials", "5"});
    CHECK(ok.code == kOk);
    CHECK(ok.out.find("1 of 1 identities passed") != std::string::npos);

    const Run direct = run({"verify", "--family", "W.", "--trials", "5", "--stress", "--direct"});
    CHECK(direct.code == kVerificationFailed);

    const std::vector<std::string> args = {"verify", "--id", "B.I.2", "--trials", "1",
                                           "--seed", "7", "--json", "-"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == kOk);
    CHECK(a.out == b.out);
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["seed"] == 7);
    CHECK(doc["tool"] == "theta");
    CHECK(doc["version"] == kVersion);
    REQUIRE(doc["reports"].size() == 1);
    const auto& rep = doc["reports"][0];
    for (const char* key : {"id", "trials", "seed", "max_abs", "max_rel", "status"})
        CHECK_MESSAGE(rep.contains(key), key);
    CHECK(rep["status"] == "pass");

    const Run failing = run({"verify", "--family", "B.I.", "--trials", "5", "--stress", "--direct",
                             "--json", "-"});
    const auto fdoc = nlohmann::json::parse(failing.out);
    bool saw_binding = false;
    for (const auto& r : fdoc["reports"])
        if (r["status"] == "fail")
            saw_binding = saw_binding || r.contains("failing_binding");
    CHECK(saw_binding);
}

TEST_CASE("catalog, zeros, reduce")
{
    const Run cat = run({"catalog"});
    CHECK(cat.code == kOk);
    std::set<std::string> manifest_ids;
    for (const auto& e : catalog_manifest())
        manifest_ids.insert(e.ids.begin(), e.ids.end());
    CHECK(static_cast<std::size_t>(std::count(cat.out.begin(), cat.out.end(), '\n')) ==
          manifest_ids.size());
    CHECK(run({"catalog", "--manifest"}).out.find("tt0\tW.I.r1") != std::string::npos);

    CHECK(run({"zeros", "--r", "1", "--tau", "1i", "--nmax", "1", "--mmax", "0"}).out ==
          "-1\n0\n1\n");
    CHECK(run({"zeros", "--r", "3", "--tau", "1i", "--nmax", "0", "--mmax", "0"}).out ==
          "0.5+0.5i\n");

    const Run red = run({"reduce", "--r", "3", "--u", "0", "--tau", "0.5i"});
    CHECK(red.code == kOk);
    CHECK(red.out.find("word:           S\n") != std::string::npos);
    CHECK(red.out.find("tau':           2i\n") != std::string::npos);
    const auto doc =
        nlohmann::json::parse(run({"reduce", "--r", "4", "--u", "3.1+1.8i", "--tau", "1.5i", "--json"}).out);
    CHECK(doc["n"] == 3);
    CHECK(doc["m"] == 1);
    CHECK(doc["word"] == "I");
    // 0.9i is below the unit circle: S first, then the lattice shift in the new frame.
    const auto doc2 =
        nlohmann::json::parse(run({"reduce", "--r", "4", "--u", "3.1+1.8i", "--tau", "0.9i", "--json"}).out);
    CHECK(doc2["word"] == "S");
    CHECK(doc2["r"] == 2);
}
