#include "theta/catalog.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <utility>

namespace theta {

namespace {

struct RawIdentity {
    std::string id;
    std::string label;
    std::string dsl;
};

using SignedTerm = std::pair<int, std::string>;

std::string t(int r, const std::string& arg, bool two_tau = false)
{
    return "t" + std::to_string(r) + "(" + arg + (two_tau ? "|2tau" : "") + ")";
}

std::string t2tau(int r, const std::string& arg) { return t(r, arg, true); }

std::string join(std::initializer_list<std::string> parts)
{
    std::string out;
    for (const auto& p : parts)
        out += (out.empty() ? "" : "*") + p;
    return out;
}

std::string power(int r, const std::string& arg, int n)
{
    std::string out;
    for (int k = 0; k < n; ++k)
        out += (k ? "*" : "") + t(r, arg);
    return out;
}

std::string sq(int r, const std::string& arg) { return power(r, arg, 2); }

// theta_r(a+b) theta_r(a-b)
std::string pm(int r, const std::string& a, const std::string& b)
{
    return t(r, a + "+" + b) + "*" + t(r, a + "-" + b);
}

std::string side(const std::vector<SignedTerm>& terms)
{
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const int c = terms[k].first;
        const int a = c < 0 ? -c : c;
        if (k == 0)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (a != 1)
            out += std::to_string(a) + "*";
        out += terms[k].second;
    }
    return out;
}

std::string eq(const std::vector<SignedTerm>& lhs, const std::vector<SignedTerm>& rhs)
{
    return side(lhs) + " = " + side(rhs);
}

// Bracket products in the (u, v, x, y) variables, W = u+x, X = u-x, Y = v+y,
// Z = v-y; the dual variables are W' = v-x, X' = v+x, Y' = u-y, Z' = u+y.
std::string bracket(std::string_view idx, bool primed)
{
    static const char* kPlain[4] = {"u+x", "u-x", "v+y", "v-y"};
    static const char* kPrimed[4] = {"v-x", "v+x", "u-y", "u+y"};
    std::string out;
    for (int k = 0; k < 4; ++k)
        out += (k ? "*" : "") + t(idx[k] - '0', primed ? kPrimed[k] : kPlain[k]);
    return out;
}

std::string expand_short(std::string_view idx)
{
    return idx.size() == 1 ? std::string(4, idx[0]) : std::string(idx);
}

// Bracket sums written as e.g. {{1, "1"}, {1, "2"}} for [1]+[2]; a trailing
// apostrophe marks the dual bracket.
struct BracketTerm {
    int coef;
    std::string_view idx;
};

std::string bracket_side(std::initializer_list<BracketTerm> terms)
{
    std::vector<SignedTerm> out;
    for (const auto& bt : terms) {
        std::string_view idx = bt.idx;
        const bool primed = !idx.empty() && idx.back() == '\'';
        if (primed)
            idx.remove_suffix(1);
        out.emplace_back(bt.coef, bracket(expand_short(idx), primed));
    }
    return side(out);
}

std::string bracket_eq(std::initializer_list<BracketTerm> lhs, std::initializer_list<BracketTerm> rhs)
{
    return bracket_side(lhs) + " = " + bracket_side(rhs);
}

void add_bilinear(std::vector<RawIdentity>& out)
{
    struct B1 {
        const char* label;
        int p, q, sign, r1, r2, r3, r4;
    };
    // theta_p(u) theta_q(v) = theta_r1(u+v|2tau) theta_r2(u-v|2tau) +- theta_r3(...) theta_r4(...)
    static constexpr B1 kSb1[6] = {
        {"sb1a", 1, 1, -1, 3, 2, 2, 3}, {"sb1b", 1, 2, 1, 1, 4, 4, 1},
        {"sb1c", 2, 2, 1, 2, 3, 3, 2},  {"sb1d", 3, 3, 1, 3, 3, 2, 2},
        {"sb1e", 3, 4, -1, 4, 4, 1, 1}, {"sb1f", 4, 4, -1, 3, 3, 2, 2},
    };
    for (int k = 0; k < 6; ++k) {
        const auto& b = kSb1[k];
        out.push_back({"B.I." + std::to_string(k + 1), b.label,
                       eq({{1, t(b.p, "u") + "*" + t(b.q, "v")}},
                          {{1, t2tau(b.r1, "u+v") + "*" + t2tau(b.r2, "u-v")},
                           {b.sign, t2tau(b.r3, "u+v") + "*" + t2tau(b.r4, "u-v")}})});
    }

    struct B2 {
        const char* label;
        int a, b, c, d, sign, e, f;
    };
    // 2 theta_a(u+v|2tau) theta_b(u-v|2tau) = theta_c(u) theta_d(v) +- theta_e(u) theta_f(v)
    static constexpr B2 kEs1[6] = {
        {"es1a", 1, 1, 4, 3, -1, 3, 4}, {"es1b", 1, 4, 1, 2, 1, 2, 1},
        {"es1c", 2, 2, 3, 3, -1, 4, 4}, {"es1d", 2, 3, 2, 2, -1, 1, 1},
        {"es1e", 3, 3, 3, 3, 1, 4, 4},  {"es1f", 4, 4, 3, 4, 1, 4, 3},
    };
    for (int k = 0; k < 6; ++k) {
        const auto& b = kEs1[k];
        out.push_back({"B.II." + std::to_string(k + 1), b.label,
                       eq({{2, t2tau(b.a, "u+v") + "*" + t2tau(b.b, "u-v")}},
                          {{1, t(b.c, "u") + "*" + t(b.d, "v")},
                           {b.sign, t(b.e, "u") + "*" + t(b.f, "v")}})});
    }
}

void add_weierstrass(std::vector<RawIdentity>& out)
{
    for (int r = 1; r <= 4; ++r)
        out.push_back({"W.I.r" + std::to_string(r), "tt1",
                       eq({{1, pm(1, "u", "x") + "*" + pm(r, "v", "y")},
                           {-1, pm(1, "v", "x") + "*" + pm(r, "u", "y")}},
                          {{1, pm(1, "u", "v") + "*" + pm(r, "x", "y")}})});

    struct W2 {
        const char* label;
        int p, q, s;
    };
    static constexpr W2 kTt2[3] = {{"tt2c", 2, 3, 4}, {"tt2b", 2, 4, 3}, {"tt2a", 3, 4, 2}};
    for (int k = 0; k < 3; ++k) {
        const auto& w = kTt2[k];
        out.push_back({"W.II." + std::to_string(k + 1), w.label,
                       eq({{1, pm(w.p, "u", "x") + "*" + pm(w.q, "v", "y")},
                           {-1, pm(w.p, "v", "x") + "*" + pm(w.q, "u", "y")}},
                          {{-1, pm(1, "u", "v") + "*" + pm(w.s, "x", "y")}})});
    }

    for (int r = 1; r <= 4; ++r)
        out.push_back({"W.III.r" + std::to_string(r), "tt3",
                       eq({{1, pm(r, "u", "x") + "*" + pm(r, "v", "y")},
                           {-1, pm(r, "u", "y") + "*" + pm(r, "v", "x")}},
                          {{(r % 2 == 1) ? 1 : -1, pm(1, "u", "v") + "*" + pm(1, "x", "y")}})});

    out.push_back({"W.IV", "tt4",
                   eq({{1, pm(3, "u", "x") + "*" + pm(3, "v", "y")},
                       {-1, pm(4, "v", "x") + "*" + pm(4, "u", "y")}},
                      {{1, pm(2, "u", "v") + "*" + pm(2, "x", "y")}})});

    out.push_back({"W.V", "tt5",
                   eq({{1, join({t(1, "u+x"), t(2, "u-x"), t(3, "v+y"), t(4, "v-y")})},
                       {-1, join({t(1, "u-y"), t(2, "u+y"), t(3, "v-x"), t(4, "v+x")})}},
                      {{1, join({t(1, "x+y"), t(2, "x-y"), t(3, "u+v"), t(4, "u-v")})}})});
}

void add_jacobi(std::vector<RawIdentity>& out)
{
    out.push_back({"J.I.1", "ft2a", bracket_eq({{1, "1"}, {1, "2"}}, {{1, "1'"}, {1, "2'"}})});
    out.push_back({"J.I.2", "ft2b", bracket_eq({{1, "1"}, {-1, "2"}}, {{1, "4'"}, {-1, "3'"}})});
    out.push_back({"J.I.3", "ft2c", bracket_eq({{1, "3"}, {1, "4"}}, {{1, "3'"}, {1, "4'"}})});
    out.push_back({"J.I.4", "ft2d", bracket_eq({{1, "3"}, {-1, "4"}}, {{1, "2'"}, {-1, "1'"}})});

    // [a] s [b] = [c]' s' [d]'
    struct F3 {
        const char* a;
        int s;
        const char* b;
        const char* c;
        int s2;
        const char* d;
    };
    static constexpr F3 kFt3[12] = {
        {"1", 1, "2", "1'", 1, "2'"},   {"1", 1, "3", "2'", 1, "4'"},
        {"1", 1, "4", "1'", 1, "4'"},   {"2", 1, "3", "2'", 1, "3'"},
        {"2", 1, "4", "1'", 1, "3'"},   {"3", 1, "4", "3'", 1, "4'"},
        {"1", -1, "2", "4'", -1, "3'"}, {"1", -1, "3", "1'", -1, "3'"},
        {"1", -1, "4", "2'", -1, "3'"}, {"2", -1, "3", "1'", -1, "4'"},
        {"2", -1, "4", "2'", -1, "4'"}, {"3", -1, "4", "2'", -1, "1'"},
    };
    for (int k = 0; k < 12; ++k) {
        const auto& f = kFt3[k];
        out.push_back({"J.ft3." + std::to_string(k + 1), "ft3",
                       bracket_eq({{1, f.a}, {f.s, f.b}}, {{1, f.c}, {f.s2, f.d}})});
    }

    static constexpr const char* kPairs[6][2] = {{"1122", "2211"}, {"1133", "3311"},
                                                 {"1144", "4411"}, {"2233", "3322"},
                                                 {"2244", "4422"}, {"3344", "4433"}};
    static constexpr const char* kSi1[6] = {"si1a", "si1b", "si1c", "si1d", "si1e", "si1f"};
    for (int k = 0; k < 6; ++k) {
        const std::string a = kPairs[k][0], b = kPairs[k][1];
        const std::string ap = a + "'", bp = b + "'";
        out.push_back({"J.II." + std::to_string(k + 1), kSi1[k],
                       bracket_eq({{1, a}, {1, b}}, {{1, ap}, {1, bp}})});
    }

    // [rrss] - [ssrr] = [r~r~s~s~]' - [s~s~r~r~]': the complement pair is row 5-k.
    static constexpr const char* kSi2[6] = {"si2a", "si2b", "si2c", "si2d", "si2e", "si2f"};
    for (int k = 0; k < 6; ++k) {
        const std::string a = kPairs[k][0], b = kPairs[k][1];
        const std::string cp = std::string(kPairs[5 - k][0]) + "'";
        const std::string dp = std::string(kPairs[5 - k][1]) + "'";
        out.push_back({"J.III." + std::to_string(k + 1), kSi2[k],
                       bracket_eq({{1, a}, {-1, b}}, {{1, cp}, {-1, dp}})});
    }

    out.push_back({"J.IV.1", "ft11a",
                   bracket_eq({{1, "1234"}, {1, "2143"}}, {{1, "3412'"}, {1, "4321'"}})});
    out.push_back({"J.IV.2", "ft11b",
                   bracket_eq({{1, "1234"}, {-1, "2143"}}, {{1, "2143'"}, {-1, "1234'"}})});
    out.push_back({"J.IV.3", "ft11c",
                   bracket_eq({{1, "3412"}, {1, "4321"}}, {{1, "1234'"}, {1, "2143'"}})});
    out.push_back({"J.IV.4", "ft11d",
                   bracket_eq({{1, "3412"}, {-1, "4321"}}, {{1, "4321'"}, {-1, "3412'"}})});
}

void add_riemann(std::vector<RawIdentity>& out)
{
    out.push_back({"R.I.1", "j1a", bracket_eq({{2, "1'"}}, {{1, "1"}, {1, "2"}, {-1, "3"}, {1, "4"}})});
    out.push_back({"R.I.2", "j1b", bracket_eq({{2, "2'"}}, {{1, "1"}, {1, "2"}, {1, "3"}, {-1, "4"}})});
    out.push_back({"R.I.3", "j1c", bracket_eq({{2, "3'"}}, {{-1, "1"}, {1, "2"}, {1, "3"}, {1, "4"}})});
    out.push_back({"R.I.4", "j1d", bracket_eq({{2, "4'"}}, {{1, "1"}, {-1, "2"}, {1, "3"}, {1, "4"}})});

    // 2[p]' = [p] + [a] + [b] - [c]
    struct R2 {
        const char* label;
        const char* p;
        const char* a;
        const char* b;
        const char* c;
    };
    static constexpr R2 kR2[12] = {
        {"j2a", "1122", "2211", "3344", "4433"}, {"j2b", "1133", "3311", "2244", "4422"},
        {"j2c", "1144", "4411", "2233", "3322"}, {"j3a", "2211", "1122", "4433", "3344"},
        {"j3b", "2233", "3322", "1144", "4411"}, {"j3c", "2244", "4422", "1133", "3311"},
        {"j4a", "3311", "1133", "4422", "2244"}, {"j4b", "3322", "2233", "4411", "1144"},
        {"j4c", "3344", "4433", "1122", "2211"}, {"j5a", "4411", "1144", "3322", "2233"},
        {"j5b", "4422", "2244", "3311", "1133"}, {"j5c", "4433", "3344", "2211", "1122"},
    };
    for (int k = 0; k < 12; ++k) {
        const auto& r = kR2[k];
        const std::string pp = std::string(r.p) + "'";
        out.push_back({"R.II." + std::to_string(k + 1), r.label,
                       bracket_eq({{2, pp}}, {{1, r.p}, {1, r.a}, {1, r.b}, {-1, r.c}})});
    }

    out.push_back({"R.III.1", "j6a",
                   bracket_eq({{2, "1234'"}}, {{-1, "1234"}, {1, "2143"}, {1, "3412"}, {1, "4321"}})});
    out.push_back({"R.III.2", "j6b",
                   bracket_eq({{2, "2143'"}}, {{-1, "2143"}, {1, "1234"}, {1, "3412"}, {1, "4321"}})});
    out.push_back({"R.III.3", "j6c",
                   bracket_eq({{2, "3412'"}}, {{-1, "3412"}, {1, "4321"}, {1, "1234"}, {1, "2143"}})});
    out.push_back({"R.III.4", "j6d",
                   bracket_eq({{2, "4321'"}}, {{-1, "4321"}, {1, "3412"}, {1, "1234"}, {1, "2143"}})});
}

void add_particular(std::vector<RawIdentity>& out)
{
    auto sq2 = [](int r, const std::string& arg) { return t2tau(r, arg) + "*" + t2tau(r, arg); };
    out.push_back({"P.bc1a", "bc1a", eq({{2, sq2(1, "u")}}, {{1, t(4, "u") + "*" + t(3, "0")}, {-1, t(3, "u") + "*" + t(4, "0")}})});
    out.push_back({"P.bc1b", "bc1b", eq({{2, sq2(2, "u")}}, {{1, t(3, "u") + "*" + t(3, "0")}, {-1, t(4, "u") + "*" + t(4, "0")}})});
    out.push_back({"P.bc1c", "bc1c", eq({{2, sq2(3, "u")}}, {{1, t(3, "u") + "*" + t(3, "0")}, {1, t(4, "u") + "*" + t(4, "0")}})});
    out.push_back({"P.bc1d", "bc1d", eq({{2, sq2(4, "u")}}, {{1, t(3, "u") + "*" + t(4, "0")}, {1, t(4, "u") + "*" + t(3, "0")}})});

    out.push_back({"P.bc2a", "bc2a", eq({{2, t2tau(1, "u") + "*" + t2tau(4, "u")}}, {{1, t(1, "u") + "*" + t(2, "0")}})});
    out.push_back({"P.bc2b", "bc2b", eq({{2, t2tau(2, "u") + "*" + t2tau(3, "u")}}, {{1, t(2, "u") + "*" + t(2, "0")}})});

    out.push_back({"P.bc3a", "bc3a", eq({{2, t2tau(2, "2u") + "*" + t2tau(2, "0")}}, {{1, sq(3, "u")}, {-1, sq(4, "u")}})});
    out.push_back({"P.bc3b", "bc3b", eq({{2, t2tau(2, "2u") + "*" + t2tau(3, "0")}}, {{1, sq(2, "u")}, {-1, sq(1, "u")}})});
    out.push_back({"P.bc3c", "bc3c", eq({{2, t2tau(3, "2u") + "*" + t2tau(2, "0")}}, {{1, sq(2, "u")}, {1, sq(1, "u")}})});
    out.push_back({"P.bc3d", "bc3d", eq({{2, t2tau(3, "2u") + "*" + t2tau(3, "0")}}, {{1, sq(3, "u")}, {1, sq(4, "u")}})});

    out.push_back({"P.bc4a", "bc4a", eq({{1, t2tau(1, "2u") + "*" + t2tau(4, "0")}}, {{1, t(1, "u") + "*" + t(2, "u")}})});
    out.push_back({"P.bc4b", "bc4b", eq({{1, t2tau(4, "2u") + "*" + t2tau(4, "0")}}, {{1, t(3, "u") + "*" + t(4, "u")}})});

    // Landen-type ratios, cleared of denominators.
    out.push_back({"L.lt1a", "lt1a",
                   eq({{1, join({t2tau(4, "2u"), t(3, "0"), t(4, "0")})}},
                      {{1, join({t2tau(4, "0"), t(3, "u"), t(4, "u")})}})});
    out.push_back({"L.lt1b", "lt1b",
                   eq({{1, join({t2tau(1, "2u"), t(3, "0"), t(4, "0")})}},
                      {{1, join({t2tau(4, "0"), t(1, "u"), t(2, "u")})}})});
    out.push_back({"L.lt2", "lt2", eq({{1, sq2(4, "0")}}, {{1, t(3, "0") + "*" + t(4, "0")}})});
}

void add_addition(std::vector<RawIdentity>& out)
{
    // theta_r(u+v) theta_r(u-v) theta_c(0)^2 = sq_a(u) sq_b(v) +- sq_c(u) sq_d(v), two forms.
    struct Form {
        int a, b, sign, c, d;
    };
    struct Ad {
        const char* id;
        const char* label;
        int r, c;
        Form first, second;
    };
    static constexpr Ad kAd[12] = {
        {"ad1a", "ad1a", 1, 2, {1, 2, -1, 2, 1}, {4, 3, -1, 3, 4}},
        {"ad1b", "ad1b", 1, 3, {1, 3, -1, 3, 1}, {4, 2, -1, 2, 4}},
        {"ad1c", "ad1c", 1, 4, {1, 4, -1, 4, 1}, {3, 2, -1, 2, 3}},
        {"ad2a", "ad2a", 2, 2, {2, 2, -1, 1, 1}, {3, 3, -1, 4, 4}},
        {"ad2b", "ad2.2", 2, 3, {3, 2, -1, 1, 4}, {2, 3, -1, 4, 1}},
        {"ad2c", "ad2.3", 2, 4, {4, 2, -1, 1, 3}, {2, 4, -1, 3, 1}},
        {"ad3a", "ad3a", 3, 2, {2, 3, 1, 1, 4}, {3, 2, 1, 4, 1}},
        {"ad3b", "ad3b", 3, 3, {1, 1, 1, 3, 3}, {2, 2, 1, 4, 4}},
        {"ad3c", "ad3c", 3, 4, {4, 3, -1, 1, 2}, {3, 4, -1, 2, 1}},
        {"ad4a", "ad4a", 4, 2, {1, 3, 1, 2, 4}, {3, 1, 1, 4, 2}},
        {"ad4b", "ad4b", 4, 3, {1, 2, 1, 3, 4}, {2, 1, 1, 4, 3}},
        {"ad4c", "ad4c", 4, 4, {4, 4, -1, 1, 1}, {3, 3, -1, 2, 2}},
    };
    for (const auto& ad : kAd) {
        const std::string lhs = pm(ad.r, "u", "v") + "*" + sq(ad.c, "0");
        int n = 1;
        for (const Form& f : {ad.first, ad.second}) {
            out.push_back({std::string("AD.") + ad.id + "." + std::to_string(n++), ad.label,
                           eq({{1, lhs}},
                              {{1, sq(f.a, "u") + "*" + sq(f.b, "v")},
                               {f.sign, sq(f.c, "u") + "*" + sq(f.d, "v")}})});
        }
    }

    // theta_a(u+v) theta_b(u-v) theta_c(0) theta_d(0) = [ab](u)[cd](v) +- [ef](u)[gh](v)
    struct Ad5 {
        int a, b, c, d, sign, e, f;
    };
    static constexpr Ad5 kAd5[6] = {
        {1, 2, 3, 4, 1, 3, 4},  {1, 3, 2, 4, 1, 2, 4},  {1, 4, 2, 3, 1, 2, 3},
        {2, 3, 2, 3, -1, 1, 4}, {2, 4, 2, 4, -1, 1, 3}, {3, 4, 3, 4, -1, 1, 2},
    };
    for (int k = 0; k < 6; ++k) {
        const auto& a = kAd5[k];
        // First product pairs (a, b) at u with (c, d) at v; second pairs (e, f) at u with
        // the complementary pair at v, which for the first three rows is (a, b) and for
        // the last three is (e, f) again.
        const bool mixed = k < 3;
        const std::string first =
            mixed ? join({t(a.a, "u"), t(a.b, "u"), t(a.c, "v"), t(a.d, "v")})
                  : join({t(a.a, "u"), t(a.b, "u"), t(a.a, "v"), t(a.b, "v")});
        const std::string second =
            mixed ? join({t(a.e, "u"), t(a.f, "u"), t(a.a, "v"), t(a.b, "v")})
                  : join({t(a.e, "u"), t(a.f, "u"), t(a.e, "v"), t(a.f, "v")});
        out.push_back({"AD.ad5." + std::to_string(k + 1), "ad5",
                       eq({{1, join({t(a.a, "u+v"), t(a.b, "u-v"), t(a.c, "0"), t(a.d, "0")})}},
                          {{1, first}, {a.sign, second}})});
    }

    auto sqsq = [](int a, int b) { return sq(a, "u") + "*" + sq(b, "v"); };
    out.push_back({"AD.ad6.1", "ad6", eq({{1, sqsq(1, 1)}, {-1, sqsq(2, 2)}}, {{1, sqsq(4, 4)}, {-1, sqsq(3, 3)}})});
    out.push_back({"AD.ad6.2", "ad6", eq({{1, sqsq(1, 2)}, {-1, sqsq(2, 1)}}, {{1, sqsq(4, 3)}, {-1, sqsq(3, 4)}})});
    out.push_back({"AD.ad6.3", "ad6", eq({{1, sqsq(1, 3)}, {-1, sqsq(3, 1)}}, {{1, sqsq(4, 2)}, {-1, sqsq(2, 4)}})});
    out.push_back({"AD.ad6.4", "ad6", eq({{1, sqsq(1, 4)}, {-1, sqsq(4, 1)}}, {{1, sqsq(3, 2)}, {-1, sqsq(2, 3)}})});

    out.push_back({"AD.ad7", "ad7",
                   eq({{1, power(1, "u", 4)}, {1, power(3, "u", 4)}},
                      {{1, power(2, "u", 4)}, {1, power(4, "u", 4)}})});
}

void add_duplication(std::vector<RawIdentity>& out)
{
    out.push_back({"D.df1", "df1",
                   eq({{1, join({t(1, "2u"), t(2, "0"), t(3, "0"), t(4, "0")})}},
                      {{2, join({t(1, "u"), t(2, "u"), t(3, "u"), t(4, "u")})}})});

    auto sqsq = [](int a, int b) { return sq(a, "u") + "*" + sq(b, "u"); };
    // theta_r(2u) theta_r(0) theta_c(0)^2
    auto mixed_lhs = [](int r, int c) { return join({t(r, "2u"), t(r, "0"), sq(c, "0")}); };
    auto cube_lhs = [](int r) { return t(r, "2u") + "*" + power(r, "0", 3); };

    out.push_back({"D.df2b", "df2b", eq({{1, mixed_lhs(2, 3)}}, {{1, sqsq(2, 3)}, {-1, sqsq(1, 4)}})});
    out.push_back({"D.df2a", "df2a", eq({{1, mixed_lhs(2, 4)}}, {{1, sqsq(2, 4)}, {-1, sqsq(1, 3)}})});
    out.push_back({"D.df2c", "df2c", eq({{1, cube_lhs(2)}}, {{1, power(2, "u", 4)}, {-1, power(1, "u", 4)}})});
    out.push_back({"D.df2d", "df2d", eq({{1, cube_lhs(2)}}, {{1, power(3, "u", 4)}, {-1, power(4, "u", 4)}})});

    out.push_back({"D.df3b", "df3b", eq({{1, mixed_lhs(3, 2)}}, {{1, sqsq(2, 3)}, {1, sqsq(1, 4)}})});
    out.push_back({"D.df3a", "df3a", eq({{1, mixed_lhs(3, 4)}}, {{1, sqsq(3, 4)}, {-1, sqsq(1, 2)}})});
    out.push_back({"D.df3c", "df3c", eq({{1, cube_lhs(3)}}, {{1, power(1, "u", 4)}, {1, power(3, "u", 4)}})});
    out.push_back({"D.df3d", "df3d", eq({{1, cube_lhs(3)}}, {{1, power(2, "u", 4)}, {1, power(4, "u", 4)}})});

    out.push_back({"D.df4b", "df4b", eq({{1, mixed_lhs(4, 2)}}, {{1, sqsq(2, 4)}, {1, sqsq(1, 3)}})});
    out.push_back({"D.df4a", "df4a", eq({{1, mixed_lhs(4, 3)}}, {{1, sqsq(1, 2)}, {1, sqsq(3, 4)}})});
    out.push_back({"D.df4c", "df4c", eq({{1, cube_lhs(4)}}, {{1, power(4, "u", 4)}, {-1, power(1, "u", 4)}})});
    out.push_back({"D.df4d", "df4d", eq({{1, cube_lhs(4)}}, {{1, power(3, "u", 4)}, {-1, power(2, "u", 4)}})});

    // The compressed form, expanded literally over the cyclic permutations
    // (alpha, beta, gamma) of (1, 2, 3) and over alpha = 1, 2, 3.
    auto parity = [](int n) { return (n % 2 == 0) ? 1 : -1; };
    static constexpr int kCyclic[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (const auto& p : kCyclic) {
        const int al = p[0], be = p[1], ga = p[2];
        const std::string tag = std::to_string(al) + std::to_string(be) + std::to_string(ga);
        out.push_back({"D.df5a." + tag, "df5a",
                       eq({{parity(be + ga), sqsq(1, al + 1)}, {1, sqsq(be + 1, ga + 1)}},
                          {{1, mixed_lhs(be + 1, ga + 1)}})});
    }
    for (const auto& p : kCyclic) {
        const int al = p[0], be = p[1], ga = p[2];
        const std::string tag = std::to_string(al) + std::to_string(be) + std::to_string(ga);
        out.push_back({"D.df5b." + tag, "df5b",
                       eq({{parity(be + ga), sqsq(1, al + 1)}, {-1, sqsq(be + 1, ga + 1)}},
                          {{-1, mixed_lhs(ga + 1, be + 1)}})});
    }
    for (int al = 1; al <= 3; ++al)
        out.push_back({"D.df5c." + std::to_string(al), "df5c",
                       eq({{1, cube_lhs(al + 1)}},
                          {{1, power(al + 1, "u", 4)}, {parity(al), power(1, "u", 4)}})});
    for (const auto& p : kCyclic) {
        const int al = p[0], be = p[1], ga = p[2];
        const std::string tag = std::to_string(al) + std::to_string(be) + std::to_string(ga);
        out.push_back({"D.df5d." + tag, "df5d",
                       eq({{1, cube_lhs(al + 1)}},
                          {{parity(ga + 1), power(be + 1, "u", 4)},
                           {parity(be + 1), power(ga + 1, "u", 4)}})});
    }
}

void add_constants(std::vector<RawIdentity>& out)
{
    out.push_back({"TC.tc1", "tc1", "dt1(0) = pi*" + join({t(2, "0"), t(3, "0"), t(4, "0")})});
    out.push_back({"TC.tc2", "tc2",
                   eq({{1, power(3, "0", 4)}}, {{1, power(2, "0", 4)}, {1, power(4, "0", 4)}})});
    // The right-hand side is evaluated as the product prod (1-q^n)/(1+q^n).
    out.push_back({"G.g1", "g1", t(4, "0") + " = " + t(4, "0")});
}

RhsRoute route_for(std::string_view id)
{
    return id == "G.g1" ? RhsRoute::GaussProduct : RhsRoute::Series;
}

std::vector<Identity> build_catalog()
{
    std::vector<RawIdentity> raw;
    add_bilinear(raw);
    add_weierstrass(raw);
    add_jacobi(raw);
    add_riemann(raw);
    add_particular(raw);
    add_addition(raw);
    add_duplication(raw);
    add_constants(raw);

    std::vector<Identity> out;
    out.reserve(raw.size());
    for (auto& r : raw) {
        Identity id = parse_identity(r.dsl);
        id.id = std::move(r.id);
        id.label = std::move(r.label);
        id.rhs_route = route_for(id.id);
        out.push_back(std::move(id));
    }
    return out;
}

std::vector<std::string> range_ids(const std::string& prefix, int first, int last)
{
    std::vector<std::string> out;
    for (int k = first; k <= last; ++k)
        out.push_back(prefix + std::to_string(k));
    return out;
}

std::vector<ManifestEntry> build_manifest()
{
    std::vector<ManifestEntry> m;
    auto add = [&m](std::string label, std::vector<std::string> ids, std::string note = {}) {
        m.push_back({std::move(label), std::move(ids), std::move(note)});
    };

    add("tc1", {"TC.tc1"});
    add("g1", {"G.g1"}, "series side against the product prod (1-q^n)/(1+q^n)");

    static constexpr const char* kSb1[6] = {"sb1a", "sb1b", "sb1c", "sb1d", "sb1e", "sb1f"};
    static constexpr const char* kEs1[6] = {"es1a", "es1b", "es1c", "es1d", "es1e", "es1f"};
    add("sb1", range_ids("B.I.", 1, 6));
    for (int k = 0; k < 6; ++k)
        add(kSb1[k], {"B.I." + std::to_string(k + 1)});
    add("es1", range_ids("B.II.", 1, 6));
    for (int k = 0; k < 6; ++k)
        add(kEs1[k], {"B.II." + std::to_string(k + 1)});

    add("tt0", {"W.I.r1"}, "subsumed by the symmetric system at r = 1");
    add("tt1", {"W.I.r1", "W.I.r2", "W.I.r3", "W.I.r4"});
    add("tt2", {"W.II.1", "W.II.2", "W.II.3"});
    add("tt2c", {"W.II.1"});
    add("tt2b", {"W.II.2"});
    add("tt2a", {"W.II.3"});
    add("tt3", {"W.III.r1", "W.III.r2", "W.III.r3", "W.III.r4"});
    add("tt4", {"W.IV"});
    add("tt5", {"W.V"});

    add("ft1", {}, "dual variables; implemented by dual_vars");
    add("ft'", {}, "(u,v,x,y) <-> (W,X,Y,Z) correspondence; all J and R identities are written in u,v,x,y through it");
    add("ft2", range_ids("J.I.", 1, 4));
    add("ft2a", {"J.I.1"});
    add("ft2b", {"J.I.2"});
    add("ft2c", {"J.I.3"});
    add("ft2d", {"J.I.4"});
    add("ft3", range_ids("J.ft3.", 1, 12));
    static constexpr const char* kSi1[6] = {"si1a", "si1b", "si1c", "si1d", "si1e", "si1f"};
    static constexpr const char* kSi2[6] = {"si2a", "si2b", "si2c", "si2d", "si2e", "si2f"};
    add("si1", range_ids("J.II.", 1, 6));
    for (int k = 0; k < 6; ++k)
        add(kSi1[k], {"J.II." + std::to_string(k + 1)});
    add("si2", range_ids("J.III.", 1, 6));
    for (int k = 0; k < 6; ++k)
        add(kSi2[k], {"J.III." + std::to_string(k + 1)});
    {
        auto ids = range_ids("J.II.", 1, 6);
        auto more = range_ids("J.III.", 1, 6);
        ids.insert(ids.end(), more.begin(), more.end());
        add("si3", ids, "compact form of si1 and si2; subsumed by their entries");
    }
    add("si4", range_ids("J.IV.", 1, 4));
    add("ft11a", {"J.IV.1"});
    add("ft11b", {"J.IV.2"});
    add("ft11c", {"J.IV.3"});
    add("ft11d", {"J.IV.4"});

    add("j1", range_ids("R.I.", 1, 4));
    add("j1a", {"R.I.1"});
    add("j1b", {"R.I.2"});
    add("j1c", {"R.I.3"});
    add("j1d", {"R.I.4"});
    static constexpr const char* kJ25[12] = {"j2a", "j2b", "j2c", "j3a", "j3b", "j3c",
                                             "j4a", "j4b", "j4c", "j5a", "j5b", "j5c"};
    for (int g = 0; g < 4; ++g)
        add("j" + std::to_string(g + 2), range_ids("R.II.", 3 * g + 1, 3 * g + 3));
    for (int k = 0; k < 12; ++k)
        add(kJ25[k], {"R.II." + std::to_string(k + 1)});
    add("j6", range_ids("R.III.", 1, 4));
    add("j6a", {"R.III.1"},
        "printed with [3421]+[4312], which fails numerically; cataloged with [3412]+[4321] as in j6b-j6d");
    add("j6b", {"R.III.2"});
    add("j6c", {"R.III.3"});
    add("j6d", {"R.III.4"});

    add("z1", {"J.I.1"}, "ft2a in the u,v,x,y variables; also checked by koornwinder_equivalence_check");
    add("z2", {}, "u <-> x image of z1; checked by koornwinder_equivalence_check");
    add("z3", {}, "v <-> x image of z1; checked by koornwinder_equivalence_check");
    add("z4", {}, "A_j, B_j, C_j notation; computed by koornwinder_equivalence_check");

    for (const char* l : {"bc1a", "bc1b", "bc1c", "bc1d", "bc2a", "bc2b", "bc3a", "bc3b", "bc3c",
                          "bc3d", "bc4a", "bc4b"})
        add(l, {std::string("P.") + l});
    add("bc1", {"P.bc1a", "P.bc1b", "P.bc1c", "P.bc1d"});
    add("bc2", {"P.bc2a", "P.bc2b"});
    add("bc3", {"P.bc3a", "P.bc3b", "P.bc3c", "P.bc3d"});
    add("bc4", {"P.bc4a", "P.bc4b"});
    add("lt1", {"L.lt1a", "L.lt1b"});
    add("lt1a", {"L.lt1a"}, "ratio form multiplied out");
    add("lt1b", {"L.lt1b"}, "ratio form multiplied out");
    add("lt2", {"L.lt2"});

    for (const char* g : {"ad1", "ad2", "ad3", "ad4"}) {
        std::vector<std::string> ids;
        for (char s : {'a', 'b', 'c'})
            for (int n : {1, 2})
                ids.push_back(std::string("AD.") + g + s + "." + std::to_string(n));
        add(g, ids);
    }
    for (const char* l : {"ad1a", "ad1b", "ad1c", "ad2a", "ad3a", "ad3b", "ad3c", "ad4a", "ad4b",
                          "ad4c"})
        add(l, {std::string("AD.") + l + ".1", std::string("AD.") + l + ".2"});
    add("ad5", range_ids("AD.ad5.", 1, 6));
    add("ad6", range_ids("AD.ad6.", 1, 4));
    add("ad7", {"AD.ad7"});
    add("tc2", {"TC.tc2"});

    add("df1", {"D.df1"});
    add("df2", {"D.df2b", "D.df2a", "D.df2c", "D.df2d"});
    add("df3", {"D.df3b", "D.df3a", "D.df3c", "D.df3d"});
    add("df4", {"D.df4b", "D.df4a", "D.df4c", "D.df4d"});
    for (const char* l : {"df2a", "df2b", "df2c", "df2d", "df3a", "df3b", "df3c", "df3d", "df4a",
                          "df4b", "df4c", "df4d"})
        add(l, {std::string("D.") + l});
    add("df5", {}, "compressed form of df2-df4; expanded below");
    add("df5a", {"D.df5a.123", "D.df5a.231", "D.df5a.312"});
    add("df5b", {"D.df5b.123", "D.df5b.231", "D.df5b.312"});
    add("df5c", {"D.df5c.1", "D.df5c.2", "D.df5c.3"});
    add("df5d", {"D.df5d.123", "D.df5d.231", "D.df5d.312"});
    return m;
}

}  // namespace

const std::vector<Identity>& builtin_catalog()
{
    static const std::vector<Identity> catalog = build_catalog();
    return catalog;
}

const Identity& find_identity(std::string_view id)
{
    static const std::map<std::string, std::size_t, std::less<>> index = [] {
        std::map<std::string, std::size_t, std::less<>> m;
        const auto& cat = builtin_catalog();
        for (std::size_t k = 0; k < cat.size(); ++k)
            m.emplace(cat[k].id, k);
        return m;
    }();
    auto it = index.find(id);
    if (it == index.end())
        throw UnknownIdentityError(std::string(id));
    return builtin_catalog()[it->second];
}

std::vector<std::string> ids_with_prefix(std::string_view prefix)
{
    std::vector<std::string> out;
    for (const auto& id : builtin_catalog())
        if (std::string_view(id.id).substr(0, prefix.size()) == prefix)
            out.push_back(id.id);
    return out;
}

const std::vector<ManifestEntry>& catalog_manifest()
{
    static const std::vector<ManifestEntry> manifest = build_manifest();
    return manifest;
}

std::string catalog_tsv()
{
    std::string out;
    for (const auto& id : builtin_catalog())
        out += id.id + "\t" + to_dsl(id) + "\t" + id.label + "\n";
    return out;
}

std::vector<Identity> parse_catalog_tsv(std::string_view text)
{
    std::vector<Identity> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = (nl == std::string_view::npos) ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        const std::size_t t1 = line.find('\t');
        const std::size_t t2 = (t1 == std::string_view::npos) ? t1 : line.find('\t', t1 + 1);
        if (t2 == std::string_view::npos)
            throw ParseError(1, "catalog line " + std::to_string(line_no) +
                                    ": expected ID<TAB>DSL<TAB>label");
        Identity id;
        try {
            id = parse_identity(line.substr(t1 + 1, t2 - t1 - 1));
        } catch (const ParseError& e) {
            throw ParseError(e.column(), "catalog line " + std::to_string(line_no) + ": " + e.what());
        }
        id.id = std::string(line.substr(0, t1));
        id.label = std::string(line.substr(t2 + 1));
        id.rhs_route = route_for(id.id);
        out.push_back(std::move(id));
    }
    return out;
}

}  // namespace theta
