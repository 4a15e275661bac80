#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "theta/catalog.hpp"
#include "theta/identity.hpp"
#include "theta/verify.hpp"

using namespace theta;

namespace {

// Equation labels of the identity sections (3 and 4) of the source, in order.
const std::vector<std::string> kSourceLabels = {
    "sb1",   "sb1a",  "sb1b",  "sb1c",  "sb1d",  "sb1e",  "sb1f",  "es1",   "es1a",  "es1b",
    "es1c",  "es1d",  "es1e",  "es1f",  "tt0",   "tt1",   "tt2",   "tt2a",  "tt2b",  "tt2c",
    "tt3",   "tt4",   "tt5",   "ft1",   "ft'",   "ft2",   "ft2a",  "ft2b",  "ft2c",  "ft2d",
    "ft3",   "si1",   "si1a",  "si1b",  "si1c",  "si1d",  "si1e",  "si1f",  "si2",   "si2a",
    "si2b",  "si2c",  "si2d",  "si2e",  "si2f",  "si3",   "si4",   "ft11a", "ft11b", "ft11c",
    "ft11d", "z1",    "z2",    "z3",    "z4",    "j1",    "j1a",   "j1b",   "j1c",   "j1d",
    "j2",    "j2a",   "j2b",   "j2c",   "j3",    "j3a",   "j3b",   "j3c",   "j4",    "j4a",
    "j4b",   "j4c",   "j5",    "j5a",   "j5b",   "j5c",   "j6",    "j6a",   "j6b",   "j6c",
    "j6d",   "bc1",   "bc1a",  "bc1b",  "bc1c",  "bc1d",  "bc2",   "bc2a",  "bc2b",  "bc3",
    "bc3a",  "bc3b",  "bc3c",  "bc3d",  "bc4",   "bc4a",  "bc4b",  "lt1",   "lt1a",  "lt1b",
    "lt2",   "ad1",   "ad1a",  "ad1b",  "ad1c",  "ad2",   "ad2a",  "ad3",   "ad3a",  "ad3b",
    "ad3c",  "ad4",   "ad4a",  "ad4b",  "ad4c",  "ad5",   "ad6",   "ad7",   "tc2",   "df1",
    "df2",   "df2a",  "df2b",  "df2c",  "df2d",  "df3",   "df3a",  "df3b",  "df3c",  "df3d",
    "df4",   "df4a",  "df4b",  "df4c",  "df4d",  "df5",   "df5a",  "df5b",  "df5c",  "df5d",
    "tc1",   "g1",
};

using Vector = std::map<std::string, Rational>;

// Rank of a set of sparse rational vectors, by elimination.
std::size_t rank_of(std::vector<Vector> rows)
{
    std::size_t rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto pivot_it = std::find_if(rows[i].begin(), rows[i].end(),
                                     [](const auto& kv) { return kv.second != Rational(0); });
        if (pivot_it == rows[i].end())
            continue;
        ++rank;
        const std::string key = pivot_it->first;
        const Rational pivot = pivot_it->second;
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            auto it = rows[j].find(key);
            if (it == rows[j].end() || it->second == Rational(0))
                continue;
            const Rational f = it->second / pivot;
            for (const auto& [k, c] : rows[i])
                rows[j][k] -= f * c;
        }
    }
    return rank;
}

}  // namespace

TEST_CASE("catalog size and ids")
{
    const auto& cat = builtin_catalog();
    CHECK(cat.size() == 155);
    std::set<std::string> ids;
    for (const auto& id : cat)
        ids.insert(id.id);
    CHECK(ids.size() == cat.size());

    const std::map<std::string, std::size_t> families = {
        {"B.I.", 6},   {"B.II.", 6}, {"W.", 13}, {"J.I.", 4},  {"J.ft3.", 12}, {"J.II.", 6},
        {"J.III.", 6}, {"J.IV.", 4}, {"R.I.", 4}, {"R.II.", 12}, {"R.III.", 4}, {"P.", 12},
        {"L.", 3},     {"AD.", 35},  {"D.", 25},  {"D.df5", 12}, {"TC.", 2},    {"G.", 1},
    };
    for (const auto& [prefix, n] : families)
        CHECK_MESSAGE(ids_with_prefix(prefix).size() == n, prefix);

    CHECK(find_identity("G.g1").rhs_route == RhsRoute::GaussProduct);
    CHECK_THROWS_AS(find_identity("X.1"), UnknownIdentityError);
    CHECK_THROWS_AS(verify({"B.I.1", "nope"}), UnknownIdentityError);
}

TEST_CASE("manifest")
{
    const auto& manifest = catalog_manifest();
    std::set<std::string> labels;
    std::set<std::string> referenced;
    for (const auto& e : manifest) {
        CHECK_MESSAGE(labels.insert(e.label).second, "duplicate label ", e.label);
        CHECK_MESSAGE((!e.ids.empty() || !e.note.empty()), e.label);
        for (const auto& id : e.ids) {
            CHECK_NOTHROW(find_identity(id));
            referenced.insert(id);
        }
    }
    for (const auto& label : kSourceLabels)
        CHECK_MESSAGE(labels.count(label) == 1, "unmapped label ", label);
    CHECK(labels.size() == kSourceLabels.size());
    for (const auto& id : builtin_catalog())
        CHECK_MESSAGE(referenced.count(id.id) == 1, "unreferenced id ", id.id);
}

TEST_CASE("catalog entries")
{
    SUBCASE("the Weierstrass identity is the symmetric system at r = 1")
    {
        const Identity tt0 = parse_identity(
            "t1(u+x)*t1(u-x)*t1(v+y)*t1(v-y) - t1(u+y)*t1(u-y)*t1(v+x)*t1(v-x) = "
            "t1(u+v)*t1(u-v)*t1(x+y)*t1(x-y)");
        CHECK(equivalent(tt0, find_identity("W.I.r1")));
    }
    SUBCASE("R.I carries 2 on the primed side")
    {
        for (const auto& id : ids_with_prefix("R.I.")) {
            const Identity& r = find_identity(id);
            REQUIRE(r.lhs.size() == 1);
            CHECK(r.lhs[0].coefficient == Rational(2));
            CHECK(r.rhs.size() == 4);
            LinearForm vx;
            vx.coeffs = {{"v", 1}, {"x", -1}};
            CHECK(r.lhs[0].factors[0].argument == vx);
        }
    }
    SUBCASE("D.df1")
    {
        CHECK(to_dsl(find_identity("D.df1")) ==
              "t1(2u)*t2(0)*t3(0)*t4(0) = 2*t1(u)*t2(u)*t3(u)*t4(u)");
    }
    SUBCASE("TC")
    {
        CHECK(to_dsl(find_identity("TC.tc1")) == "dt1(0) = pi*t2(0)*t3(0)*t4(0)");
    }
}

TEST_CASE("compressed duplication formulae coincide with the expanded ones")
{
    std::vector<std::string> expanded;
    for (const char* p : {"D.df2", "D.df3", "D.df4"}) {
        const auto ids = ids_with_prefix(p);
        expanded.insert(expanded.end(), ids.begin(), ids.end());
    }
    REQUIRE(expanded.size() == 12);
    std::set<std::string> hit;
    for (const auto& id : ids_with_prefix("D.df5")) {
        const Identity& c = find_identity(id);
        int matches = 0;
        for (const auto& e : expanded)
            if (equivalent(c, find_identity(e))) {
                ++matches;
                hit.insert(e);
            }
        CHECK_MESSAGE(matches == 1, id);
    }
    // The twelve instances cover every df2-df4 entry exactly once.
    CHECK(hit.size() == 12);
}

TEST_CASE("the full ft3 list lies in the span of ft2")
{
    std::vector<Vector> base;
    for (const auto& id : ids_with_prefix("J.I."))
        base.push_back(difference_terms(find_identity(id)));
    REQUIRE(base.size() == 4);
    CHECK(rank_of(base) == 4);
    for (const auto& id : ids_with_prefix("J.ft3.")) {
        auto rows = base;
        rows.push_back(difference_terms(find_identity(id)));
        CHECK_MESSAGE(rank_of(rows) == 4, id);
    }
    // And a relation from outside does not.
    auto rows = base;
    rows.push_back(difference_terms(find_identity("J.II.1")));
    CHECK(rank_of(rows) == 5);
}

TEST_CASE("TSV export")
{
    const std::string tsv = catalog_tsv();
    CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 155);
    CHECK(tsv.rfind("B.I.1\tt1(u)*t1(v) = ", 0) == 0);
    const auto back = parse_catalog_tsv(tsv);
    REQUIRE(back.size() == builtin_catalog().size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].id == builtin_catalog()[i].id);
        CHECK(back[i].label == builtin_catalog()[i].label);
        CHECK(back[i].structurally_equal(builtin_catalog()[i]));
    }
    try {
        parse_catalog_tsv("A.1\tt1(u) = t1(u)\tx\nA.2\tt1(u) = = t1(u)\ty\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("j6a as printed is not an identity")
{
    // [3421] + [4312] in place of [3412] + [4321].
    Identity literal = parse_identity(
        "2*t1(v-x)*t2(v+x)*t3(u-y)*t4(u+y) = -t1(u+x)*t2(u-x)*t3(v+y)*t4(v-y)"
        " + t2(u+x)*t1(u-x)*t4(v+y)*t3(v-y)"
        " + t3(u+x)*t4(u-x)*t2(v+y)*t1(v-y)"
        " + t4(u+x)*t3(u-x)*t1(v+y)*t2(v-y)");
    literal.id = "j6a.literal";
    VerifyOptions opt;
    opt.trials = 20;
    const auto bad = verify_identities({literal}, opt);
    CHECK(bad[0].status == ReportStatus::Fail);
    CHECK(bad[0].max_rel > 1e-2);
    const auto good = verify({"R.III.1"}, opt);
    CHECK(good[0].status == ReportStatus::Pass);
}
