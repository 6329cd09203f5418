#pragma once

#include <string>
#include <vector>

#include "quadform/isotropy.hpp"
#include "quadform/places.hpp"

namespace quadform {

// Justification for the places a report does not enumerate.  When the form
// has rank >= 5 every unenumerated place sees a full-rank unit residue form
// over a p-adic field or F_p(t), which is isotropic; smaller ranks get an
// explicit refusal and the report is marked incomplete.
struct GoodPlaceRecord {
    bool applies = false;
    std::string text;
};

// One checked completion: the chart it lives on, the place in chart
// coordinates, the form rewritten on that chart, and the engine verdict.
struct ReportEntry {
    Chart chart;
    Place place;
    std::string label;
    std::vector<std::string> chart_coeffs;
    Verdict verdict;
};

// Verdicts at every bad place of the base chart plus the requested probe
// charts.  The summary never claims global isotropy: absence of an
// anisotropic completion only means "locally isotropic at all checked
// places".  A single anisotropic completion certifies global anisotropy.
struct LocalGlobalReport {
    std::uint64_t p = 5;
    std::uint64_t nonresidue = 2;
    int precision = 24;
    QtForm form;
    std::vector<std::string> coeffs;
    std::vector<ReportEntry> entries;
    GoodPlaceRecord good_places;
    std::vector<ReportEntry> probes;
    bool anisotropic_certificate = false;
    std::string certificate_label;
    std::string summary;
};

// Bad places of the base chart: one horizontal place per atom appearing in
// any coefficient, then infinity, then the special fibre, in canonical
// order.
std::vector<Place> enumerate_bad_places(const QtForm& q);

GoodPlaceRecord good_place_rule(const QtForm& q);

// The form rewritten in the coordinates of a new chart, normalized.
QtForm substitute(const QtForm& q, const ChartMove& mv);
QtForm form_on_chart(const Chart& ch, const QtForm& q_base);

// Zoom charts t = c + p*x at every residue disc c in F_p where the
// reduction of some coefficient atom meets the special fibre.  Pure
// function of (q, p); charts are deduplicated and ordered by c.
std::vector<Chart> auto_probe_charts(const QtForm& q);

LocalGlobalReport local_global_report(const QtForm& q, const std::vector<Chart>& probes,
                                      int precision = 24);
LocalGlobalReport local_global_report_auto(const QtForm& q, int precision = 24);

// Re-run every stored entry and probe; true iff each verdict and rendering
// reproduces bit-for-bit.
bool replay_report(const LocalGlobalReport& r);

}  // namespace quadform
