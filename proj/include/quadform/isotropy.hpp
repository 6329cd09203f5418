#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quadform/diagform.hpp"

namespace quadform {

// Stable rule tags used in decision chains and reports.
namespace rules {
inline constexpr const char* kEmpty = "empty";
inline constexpr const char* kRank1 = "rank-1";
inline constexpr const char* kRank2Disc = "rank-2-disc";
inline constexpr const char* kRankGe3 = "rank-ge-3";
inline constexpr const char* kRankGe5 = "rank-ge-5";
inline constexpr const char* kSpringer = "springer";
inline constexpr const char* kGlobalSquareTest = "global-square-test";
inline constexpr const char* kHasseMinkowski = "hasse-minkowski";
}  // namespace rules

// Typed inputs stored in chain nodes so certificates can be re-executed.
struct FfzGlobalInput {
    FFRForm q;
    std::string var = "z";
};
struct FfzCompletionInput {
    FFRForm q;
    FFPlace v;
    std::string var = "z";
};
struct QtCompletionInput {
    QtForm q;
    Place pl;
    int precision = 24;
    std::string var = "t";
};

using NodeForm = std::variant<std::monostate, FqForm, LocalForm, QpSymForm, FfzGlobalInput,
                              FfzCompletionInput, QtCompletionInput>;

// One step of a decision: the form at this node, the rule that decides it,
// and the sub-decisions it reduces to.  Springer nodes list the q1 chain
// before the q2 chain; Hasse-Minkowski nodes list places in canonical order
// and stop after the first anisotropic completion.
struct DecisionNode {
    NodeForm input;
    std::string field;   // rendered field / completion tag
    std::vector<std::string> coeffs;
    std::string rule;
    std::string detail;
    bool isotropic = false;
    std::vector<DecisionNode> parts;
};

// Equality of the rendered content (ignores the typed payload).
bool same_chain(const DecisionNode& x, const DecisionNode& y);

struct Verdict {
    bool isotropic = false;
    DecisionNode chain;
    std::optional<std::vector<std::string>> witness;
};

// Exact decisions.  All recursions terminate in finite-field facts.
Verdict decide_finite(const FqForm& q);
Verdict decide_local(const LocalForm& q);
Verdict decide_qp_sym(const QpSymForm& q);
Verdict decide_ffz_completion(const FFRForm& q, const FFPlace& v, const std::string& var = "z");
Verdict decide_ffz_global(const FFRForm& q, const std::string& var = "z");
Verdict decide_qt_completion(const QtForm& q, const Place& pl, int precision = 24,
                             const std::string& var = "t");

// Re-execute a stored chain from its typed input; true iff every step
// reproduces the stored rendering and verdicts.
bool replay_chain(const DecisionNode& node);

// Rendered field tags.
std::string finite_field_tag(const FiniteFieldPtr& F);
std::string local_field_tag(const LocalFieldPtr& K);

}  // namespace quadform
