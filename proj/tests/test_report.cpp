#include <doctest.h>

#include <algorithm>

#include "quadform/report.hpp"

using namespace quadform;

namespace {

const char* kSixForm = "<-a, -p, a*p, t, a*(p-t), -a*t*(p-t)>";

QtForm six_form() { return qt_parse_form(5, kSixForm, "t"); }

std::vector<std::string> labels(const std::vector<ReportEntry>& es) {
    std::vector<std::string> out;
    for (const auto& e : es) out.push_back(e.label);
    return out;
}

}  // namespace

TEST_CASE("bad places of the base chart") {
    auto pls = enumerate_bad_places(six_form());
    REQUIRE(pls.size() == 4);
    CHECK(place_to_string(pls[0], "t") == "(t)");
    CHECK(place_to_string(pls[1], "t") == "(t-5)");
    CHECK(place_to_string(pls[2], "t") == "(1/t)");
    CHECK(place_to_string(pls[3], "t") == "(p)");

    // constant coefficients leave only infinity and the special fibre
    auto q = qt_parse_form(5, "<1, -1>", "t");
    pls = enumerate_bad_places(q);
    REQUIRE(pls.size() == 2);
    CHECK(pls[0] == place_infinity());
    CHECK(pls[1] == place_special_fibre());

    // quadratic atoms contribute their own place
    auto q2 = qt_parse_form(5, "<t, -(t^2-2)>", "t");
    pls = enumerate_bad_places(q2);
    REQUIRE(pls.size() == 4);
    CHECK(place_to_string(pls[1], "t") == "(t^2-2)");
}

TEST_CASE("good-place rule gates on rank") {
    auto ok = good_place_rule(six_form());
    CHECK(ok.applies);
    CHECK(ok.text.find("rank 6") != std::string::npos);

    auto no = good_place_rule(qt_parse_form(5, "<1, a, t, -a*t>", "t"));
    CHECK_FALSE(no.applies);
    CHECK(no.text.find("incomplete") != std::string::npos);
}

TEST_CASE("substitution onto the blowup chart") {
    auto blown = substitute(six_form(), {ChartMove::Zoom, Rat(0)});
    auto names = render_coeffs(blown, "x");
    REQUIRE(names.size() == 6);
    CHECK(names[0] == "-a");
    CHECK(names[1] == "-p");
    CHECK(names[2] == "a*p");
    CHECK(names[3] == "p*x");
    CHECK(names[4] == "-a*p*(x-1)");
    CHECK(names[5] == "a*x*(x-1)");

    // one inversion takes <t> to <x> up to the square x^2
    auto inv = substitute(qt_parse_form(5, "<t>", "t"), {ChartMove::Invert});
    CHECK(render_coeffs(inv, "x") == std::vector<std::string>{"x"});
}

TEST_CASE("auto probes pick the residue discs met by atoms") {
    auto probes = auto_probe_charts(six_form());
    REQUIRE(probes.size() == 1);  // t and t-5 both meet the fibre at the disc of 0
    CHECK(probes[0].to_string() == "t=p*x");

    auto q = qt_parse_form(5, "<t, -(t-1), (t-5)*(t-2)>", "t");
    probes = auto_probe_charts(q);
    REQUIRE(probes.size() == 3);
    CHECK(probes[0].to_string() == "t=p*x");
    CHECK(probes[1].to_string() == "t=1+p*x");
    CHECK(probes[2].to_string() == "t=2+p*x");

    // a quadratic atom with no rational root mod p contributes nothing
    CHECK(auto_probe_charts(qt_parse_form(5, "<1, -(t^2-2)>", "t")).empty());

    // an atom with p in a denominator misses the special fibre of this chart
    QtForm pencil_like{5, {qrf_make(5, 1, 0, {{qatom_linear(Rat(1, 3125)), 1}})}};
    CHECK(auto_probe_charts(pencil_like).empty());

    // determinism
    auto again = auto_probe_charts(q);
    REQUIRE(again.size() == probes.size());
    for (std::size_t i = 0; i < again.size(); ++i) CHECK(again[i] == probes[i]);
}

TEST_CASE("local-global report on the six-coefficient form") {
    auto rep = local_global_report_auto(six_form());
    CHECK(rep.p == 5);
    CHECK(rep.nonresidue == 2);

    CHECK(labels(rep.entries) ==
          std::vector<std::string>{"(t)", "(t-5)", "(1/t)", "(p)"});
    for (const auto& e : rep.entries) CHECK(e.verdict.isotropic);

    REQUIRE(rep.probes.size() == 1);
    const auto& probe = rep.probes[0];
    CHECK(probe.label == "chart t=p*x, place (p)");
    CHECK(probe.chart_coeffs ==
          std::vector<std::string>{"-a", "-p", "a*p", "p*x", "-a*p*(x-1)", "a*x*(x-1)"});
    CHECK_FALSE(probe.verdict.isotropic);

    CHECK(rep.good_places.applies);
    CHECK(rep.anisotropic_certificate);
    CHECK(rep.certificate_label == "chart t=p*x, place (p)");
    CHECK(rep.summary.find("anisotropic over Q_5(t)") != std::string::npos);
    CHECK(rep.summary.find("isotropic at every bad place of the base chart") !=
          std::string::npos);
    CHECK(rep.summary.find("unit-residue rank rule") != std::string::npos);

    CHECK(replay_report(rep));
}

TEST_CASE("reports never claim global isotropy") {
    // everywhere-isotropic constants: the summary stays agnostic
    auto rep = local_global_report_auto(qt_parse_form(5, "<1, -1, t>", "t"));
    for (const auto& e : rep.entries) CHECK(e.verdict.isotropic);
    CHECK_FALSE(rep.anisotropic_certificate);
    CHECK(rep.certificate_label.empty());
    CHECK(rep.summary.find("not decided") != std::string::npos);
    CHECK(rep.summary.find("rank < 5") != std::string::npos);  // rank 3: incomplete
    CHECK(replay_report(rep));
}

TEST_CASE("probe handling") {
    auto q = six_form();

    // duplicates collapse
    Chart bl = chart_extend(chart_base(5), {ChartMove::Zoom, Rat(0)});
    auto rep = local_global_report(q, {bl, bl, bl});
    CHECK(rep.probes.size() == 1);

    // a probe over the wrong prime is rejected
    Chart wrong = chart_extend(chart_base(7), {ChartMove::Zoom, Rat(0)});
    CHECK_THROWS_AS(local_global_report(q, {wrong}), error);

    // no probes at all: the base entries alone leave the verdict open
    auto bare = local_global_report(q, {});
    CHECK_FALSE(bare.anisotropic_certificate);
    CHECK(bare.summary.find("not decided") != std::string::npos);
}

TEST_CASE("report entries agree with direct completion calls") {
    auto q = qt_parse_form(5, "<1, a, -t, -a*(t-5)>", "t");
    auto rep = local_global_report_auto(q);
    for (const auto& e : rep.entries) {
        auto direct = decide_qt_completion(rep.form, e.place, rep.precision, "t");
        CHECK(direct.isotropic == e.verdict.isotropic);
        CHECK(same_chain(direct.chain, e.verdict.chain));
    }
    CHECK(replay_report(rep));
}

TEST_CASE("unnormalized input is normalized once, then replayable") {
    // square factors and duplicate atoms disappear from the stored form
    QtForm rough{5, {qrf_parse(5, "4*t^2*(t-5)", "t"), qrf_parse(5, "-9", "t")}};
    auto rep = local_global_report_auto(rough);
    CHECK(rep.coeffs == std::vector<std::string>{"(t-5)", "-1"});
    CHECK(replay_report(rep));
}
