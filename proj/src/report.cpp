#include "quadform/report.hpp"

#include <algorithm>
#include <set>

#include "quadform/errors.hpp"

namespace quadform {

namespace {

std::string probe_label(const Chart& ch) {
    return "chart " + ch.to_string() + ", place (p)";
}

// p-integrality of an atom: reductions mod p make sense only when no
// coefficient has p in a denominator.
bool atom_p_integral(const QAtom& m, std::uint64_t p) {
    const Int pi(p);
    if (m.c0 != 0 && padic_val(m.c0, pi) < 0) return false;
    if (m.deg == 2 && m.c1 != 0 && padic_val(m.c1, pi) < 0) return false;
    return true;
}

}  // namespace

std::vector<Place> enumerate_bad_places(const QtForm& q) {
    validate(q);
    std::set<Place> places;
    for (const auto& c : q.coeffs) {
        for (const auto& pl : qrf_support_places(c)) places.insert(pl);
    }
    places.insert(place_infinity());
    places.insert(place_special_fibre());
    return {places.begin(), places.end()};
}

GoodPlaceRecord good_place_rule(const QtForm& q) {
    GoodPlaceRecord rec;
    const std::size_t r = rank(q);
    if (r >= 5) {
        rec.applies = true;
        rec.text = "at every place outside the enumerated set all coefficients are units, so the"
                   " first residue form keeps rank " +
                   std::to_string(r) +
                   " >= 5 over a p-adic field or F_p(t) and is isotropic";
    } else {
        rec.applies = false;
        rec.text = "rank " + std::to_string(r) +
                   " < 5: the unit-residue rule does not apply, and places outside the"
                   " enumerated set are not checked; the report is incomplete";
    }
    return rec;
}

QtForm substitute(const QtForm& q, const ChartMove& mv) {
    validate(q);
    QtForm out;
    out.p = q.p;
    out.coeffs.reserve(q.coeffs.size());
    for (const auto& c : q.coeffs) out.coeffs.push_back(qrf_substitute(c, mv));
    return normalize(out);
}

QtForm form_on_chart(const Chart& ch, const QtForm& q_base) {
    validate(q_base);
    if (ch.p != q_base.p) throw error(errc::invalid_input, "chart and form use different primes");
    QtForm out;
    out.p = q_base.p;
    out.coeffs.reserve(q_base.coeffs.size());
    for (const auto& c : q_base.coeffs) out.coeffs.push_back(qrf_on_chart(ch, c));
    return normalize(out);
}

std::vector<Chart> auto_probe_charts(const QtForm& q) {
    validate(q);
    const std::uint64_t p = q.p;
    std::set<std::uint64_t> discs;
    for (const auto& c : q.coeffs) {
        for (const auto& [m, e] : c.atoms) {
            (void)e;
            if (!atom_p_integral(m, p)) continue;  // meets the fibre only beyond this chart
            auto vanishes_mod_p = [&](const Rat& value) {
                return value == 0 || padic_val(value, Int(p)) > 0;
            };
            if (m.deg == 1) {
                const Rat root = -m.c0;
                discs.insert(vanishes_mod_p(root) ? 0 : rat_mod_prime(root, p));
                continue;
            }
            for (std::uint64_t r = 0; r < p; ++r)
                if (vanishes_mod_p(m.eval(Rat(r)))) discs.insert(r);
        }
    }
    std::vector<Chart> probes;
    probes.reserve(discs.size());
    for (std::uint64_t c : discs)
        probes.push_back(chart_extend(chart_base(p), ChartMove{ChartMove::Zoom, Rat(c)}));
    return probes;
}

LocalGlobalReport local_global_report(const QtForm& q, const std::vector<Chart>& probes,
                                      int precision) {
    const QtForm qn = normalize(q);
    validate(qn);

    LocalGlobalReport rep;
    rep.p = qn.p;
    rep.nonresidue = smallest_nonresidue(qn.p);
    rep.precision = precision;
    rep.form = qn;
    rep.coeffs = render_coeffs(qn, "t");
    rep.good_places = good_place_rule(qn);

    for (const auto& pl : enumerate_bad_places(qn)) {
        ReportEntry e;
        e.chart = chart_base(qn.p);
        e.place = pl;
        e.label = place_to_string(pl, "t");
        e.chart_coeffs = rep.coeffs;
        e.verdict = decide_qt_completion(qn, pl, precision, "t");
        rep.entries.push_back(std::move(e));
    }

    std::vector<Chart> seen;
    for (const auto& ch : probes) {
        if (ch.p != qn.p) throw error(errc::invalid_input, "probe chart uses a different prime");
        if (std::find(seen.begin(), seen.end(), ch) != seen.end()) continue;
        seen.push_back(ch);
        const QtForm qc = form_on_chart(ch, qn);
        ReportEntry e;
        e.chart = ch;
        e.place = place_special_fibre();
        e.label = probe_label(ch);
        e.chart_coeffs = render_coeffs(qc, ch.var());
        e.verdict = decide_qt_completion(qc, e.place, precision, ch.var());
        rep.probes.push_back(std::move(e));
    }

    bool base_all_isotropic = true;
    for (const auto& e : rep.entries) {
        if (!e.verdict.isotropic) base_all_isotropic = false;
        if (!e.verdict.isotropic && !rep.anisotropic_certificate) {
            rep.anisotropic_certificate = true;
            rep.certificate_label = e.label;
        }
    }
    for (const auto& e : rep.probes) {
        if (!e.verdict.isotropic && !rep.anisotropic_certificate) {
            rep.anisotropic_certificate = true;
            rep.certificate_label = e.label;
        }
    }

    std::string summary;
    if (rep.anisotropic_certificate) {
        summary = "anisotropic over Q_" + std::to_string(qn.p) + "(t): the completion at " +
                  rep.certificate_label + " is anisotropic";
    } else {
        summary = "no anisotropic completion found among the checked places; global isotropy is"
                  " not decided by this report";
    }
    if (base_all_isotropic)
        summary += "; isotropic at every bad place of the base chart";
    summary += "; ";
    summary += rep.good_places.applies
                   ? "remaining places are covered by the unit-residue rank rule"
                   : "remaining places are not covered (rank < 5)";
    rep.summary = summary;
    return rep;
}

LocalGlobalReport local_global_report_auto(const QtForm& q, int precision) {
    return local_global_report(q, auto_probe_charts(q), precision);
}

bool replay_report(const LocalGlobalReport& r) {
    auto replay_entry = [&](const ReportEntry& e) {
        const QtForm qc = form_on_chart(e.chart, r.form);
        const std::string var = e.chart.var();
        if (render_coeffs(qc, var) != e.chart_coeffs) return false;
        const Verdict v = decide_qt_completion(qc, e.place, r.precision, var);
        return v.isotropic == e.verdict.isotropic && same_chain(v.chain, e.verdict.chain);
    };
    for (const auto& e : r.entries)
        if (!replay_entry(e)) return false;
    for (const auto& e : r.probes)
        if (!replay_entry(e)) return false;
    return true;
}

}  // namespace quadform
