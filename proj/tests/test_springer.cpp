#include <doctest.h>

#include "quadform/diagform.hpp"

using namespace quadform;

namespace {

const char* kSixForm = "<-a, -p, a*p, t, a*(p-t), -a*t*(p-t)>";

QtForm six_form() { return qt_parse_form(5, kSixForm, "t"); }

std::vector<FactoredRatFunc> V(std::initializer_list<const char*> ss, const char* var = "t") {
    std::vector<FactoredRatFunc> out;
    for (auto* s : ss) out.push_back(qrf_parse(5, s, var));
    return out;
}

std::vector<FFRatFunc> W(const FiniteFieldPtr& F, std::initializer_list<const char*> ss,
                         const char* var) {
    std::vector<FFRatFunc> out;
    for (auto* s : ss) out.push_back(ffr_parse(F, s, var));
    return out;
}

}  // namespace

TEST_CASE("form parsing and rendering") {
    auto q = six_form();
    CHECK(rank(q) == 6);
    auto r = render_coeffs(q, "t");
    CHECK(r[0] == "-a");
    CHECK(r[4] == "-a*(t-5)");
    CHECK(r[5] == "a*t*(t-5)");
    CHECK(form_to_string(r) == "<-a, -p, a*p, t, -a*(t-5), a*t*(t-5)>");
    CHECK_THROWS_AS(qt_parse_form(5, "<1, 0>", "t"), error);
    CHECK_THROWS_AS(qt_parse_form(5, "<>", "t"), error);
}

TEST_CASE("normalize strips square content, keeps verdict data") {
    auto q = qt_parse_form(5, "<4, 9, p^2*t^3>", "t");
    auto n = normalize(q);
    CHECK(n.coeffs == V({"1", "1", "t"}));
}

TEST_CASE("residue decomposition at the section (t)") {
    auto d = qt_springer_rat(six_form(), place_horizontal(qatom_linear(Rat(0))));
    CHECK(d.q1.coeffs == V({"-a", "-p", "a*p", "a*p"}));
    CHECK(d.q2.coeffs == V({"1", "-a*p"}));
    CHECK(rank(d.q1) + rank(d.q2) == 6);
}

TEST_CASE("residue decomposition at the section (t-5)") {
    auto d = qt_springer_rat(six_form(), place_horizontal(qatom_linear(Rat(-5))));
    CHECK(d.q1.coeffs == V({"-a", "-p", "a*p", "p"}));
    CHECK(d.q2.coeffs == V({"-a", "a*p"}));
}

TEST_CASE("residue decomposition at infinity") {
    auto d = qt_springer_rat(six_form(), place_infinity());
    CHECK(d.q1.coeffs == V({"-a", "-p", "a*p", "a"}));
    CHECK(d.q2.coeffs == V({"1", "-a"}));
}

TEST_CASE("residue decomposition at the special fibre") {
    auto F = std::make_shared<const FiniteField>(5);
    auto d = qt_springer_ffz(six_form(), F);
    CHECK(d.q1.coeffs == W(F, {"-a", "t", "-a*t", "a"}, "t"));
    CHECK(d.q2.coeffs == W(F, {"-1", "a"}, "t"));
}

TEST_CASE("blowup substitution reproduces the printed form") {
    auto q = six_form();
    QtForm sub{5, {}};
    for (const auto& c : q.coeffs)
        sub.coeffs.push_back(qrf_substitute(c, {ChartMove::Zoom, Rat(0)}));
    CHECK(sub.coeffs == V({"-a", "-p", "a*p", "p*x", "-a*p*(x-1)", "a*p^2*x*(x-1)"}, "x"));
    auto printed = normalize(sub);
    CHECK(printed.coeffs == V({"-a", "-p", "a*p", "p*x", "-a*p*(x-1)", "a*x*(x-1)"}, "x"));

    // special fibre of the x-chart: the residue pair from the blown-up form
    auto F = std::make_shared<const FiniteField>(5);
    auto d = qt_springer_ffz(sub, F);
    CHECK(d.q1.coeffs == W(F, {"-a", "a*x*(x-1)"}, "x"));
    CHECK(d.q2.coeffs == W(F, {"-1", "a", "x", "-a*(x-1)"}, "x"));
    // the normalized and raw forms decompose identically
    auto dn = qt_springer_ffz(printed, F);
    CHECK(dn.q1.coeffs == d.q1.coeffs);
    CHECK(dn.q2.coeffs == d.q2.coeffs);
}

TEST_CASE("numeric springer over Q_5") {
    auto K = LocalField::create({5, ExtKind::None, 0, 0, 12});
    LocalForm q{K, {K->from_int(5), K->from_int(2), K->from_int(50), K->from_int(3)}};
    auto d = springer_decompose(q);
    REQUIRE(rank(d.q1) == 3);
    REQUIRE(rank(d.q2) == 1);
    CHECK(d.q1.coeffs[0] == d.q1.F->from_int(2));
    CHECK(d.q1.coeffs[1] == d.q1.F->from_int(2));
    CHECK(d.q1.coeffs[2] == d.q1.F->from_int(3));
    CHECK(d.q2.coeffs[0] == d.q2.F->from_int(1));
}

TEST_CASE("springer refuses coefficients of unknown valuation") {
    auto K = LocalField::create({5, ExtKind::None, 0, 0, 6});
    auto x = K->from_rational(Rat(7));
    auto fuzz = K->sub(x, x);  // cancellation: valuation no longer certified
    LocalForm q{K, {K->from_int(1), fuzz}};
    CHECK_THROWS_AS(springer_decompose(q), error);
}

TEST_CASE("exact springer over Q_5 symbols") {
    QpSymForm q{5, V({"-a", "p", "a*p^3", "4"})};
    auto d = springer_decompose(q);
    REQUIRE(rank(d.q1) == 2);
    REQUIRE(rank(d.q2) == 2);
    // residues: -a = 3, 4; stripped units 1, a = 2
    CHECK(d.q1.coeffs[0] == d.q1.F->from_int(3));
    CHECK(d.q1.coeffs[1] == d.q1.F->from_int(4));
    CHECK(d.q2.coeffs[0] == d.q2.F->from_int(1));
    CHECK(d.q2.coeffs[1] == d.q2.F->from_int(2));
}

TEST_CASE("two-parameter split rejects the six-entry form at (p, t)") {
    try {
        two_param_decompose(six_form(), qatom_linear(Rat(0)));
        FAIL("expected NonNormalCrossings");
    } catch (const error& e) {
        CHECK(e.code() == errc::non_normal_crossings);
        CHECK(std::string(e.what()).find("-a*(t-5)") != std::string::npos);
    }
}

TEST_CASE("two-parameter split of the blown-up form at (p, x)") {
    auto q = six_form();
    QtForm sub{5, {}};
    for (const auto& c : q.coeffs)
        sub.coeffs.push_back(qrf_substitute(c, {ChartMove::Zoom, Rat(0)}));
    auto d = two_param_decompose(sub, qatom_linear(Rat(0)));
    CHECK(d.q1 == V({"-a"}, "x"));
    CHECK(d.q2 == V({"-a*(1-x)"}, "x"));
    CHECK(d.q3 == V({"-1", "a", "a*(1-x)"}, "x"));
    CHECK(d.q4 == V({"1"}, "x"));
    CHECK(d.q1.size() + d.q2.size() + d.q3.size() + d.q4.size() == 6);
}

TEST_CASE("two-parameter split of a unit form") {
    auto d = two_param_decompose(qt_parse_form(5, "<1, -a, 3>", "t"), qatom_linear(Rat(0)));
    CHECK(d.q1.size() == 3);
    CHECK(d.q2.empty());
    CHECK(d.q3.empty());
    CHECK(d.q4.empty());
}

TEST_CASE("finite-field place decomposition of F_p(z) coefficients") {
    auto F = std::make_shared<const FiniteField>(5);
    FFRForm q{F, W(F, {"-1", "a", "z", "a*(1-z)"}, "z")};
    FFPlace inf;
    inf.at_infinity = true;
    auto d = springer_decompose(q, inf);
    REQUIRE(rank(d.q1) == 2);
    REQUIRE(rank(d.q2) == 2);
    CHECK(d.q1.coeffs[0] == F->from_int(-1));
    CHECK(d.q1.coeffs[1] == F->from_int(2));
    CHECK(d.q2.coeffs[0] == F->from_int(1));
    CHECK(d.q2.coeffs[1] == F->from_int(-2));
}
