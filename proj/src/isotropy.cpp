#include "quadform/isotropy.hpp"

#include <algorithm>
#include <set>

namespace quadform {

std::string finite_field_tag(const FiniteFieldPtr& F) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < F->degree(); ++i) q *= F->p();
    return "F_" + std::to_string(q);
}

std::string local_field_tag(const LocalFieldPtr& K) {
    std::string base = "Q_" + std::to_string(K->desc().p);
    if (K->desc().ext == ExtKind::None) return base;
    long long b = K->desc().def_b, c = K->desc().def_c;
    std::string poly = "g^2";
    if (b != 0) poly += (b > 0 ? "+" : "-") + std::to_string(std::abs(b)) + "*g";
    if (c != 0) poly += (c > 0 ? "+" : "-") + std::to_string(std::abs(c));
    return base + "[g]/(" + poly + ")";
}

bool same_chain(const DecisionNode& x, const DecisionNode& y) {
    if (x.field != y.field || x.coeffs != y.coeffs || x.rule != y.rule ||
        x.detail != y.detail || x.isotropic != y.isotropic ||
        x.parts.size() != y.parts.size())
        return false;
    for (std::size_t i = 0; i < x.parts.size(); ++i)
        if (!same_chain(x.parts[i], y.parts[i])) return false;
    return true;
}

namespace {

DecisionNode empty_leaf(NodeForm input, std::string field) {
    DecisionNode n;
    n.input = std::move(input);
    n.field = std::move(field);
    n.rule = rules::kEmpty;
    n.detail = "empty form";
    n.isotropic = false;
    return n;
}

}  // namespace

Verdict decide_finite(const FqForm& q) {
    Verdict out;
    std::string tag = finite_field_tag(q.F);
    if (q.coeffs.empty()) {
        out.chain = empty_leaf(q, tag);
        return out;
    }
    validate(q);
    DecisionNode n;
    n.input = q;
    n.field = tag;
    n.coeffs = render_coeffs(q);
    if (q.coeffs.size() == 1) {
        n.rule = rules::kRank1;
        n.detail = "a*x^2 has no nontrivial zero";
        n.isotropic = false;
    } else if (q.coeffs.size() == 2) {
        auto d = q.F->neg(q.F->mul(q.coeffs[0], q.coeffs[1]));
        bool sq = q.F->is_square(d);
        n.rule = rules::kRank2Disc;
        n.detail = "-(a1*a2) = " + q.F->to_string(d) + (sq ? ", a square" : ", a nonsquare");
        n.isotropic = sq;
    } else {
        n.rule = rules::kRankGe3;
        n.detail = "rank >= 3 over a finite field";
        n.isotropic = true;
    }
    out.isotropic = n.isotropic;
    out.chain = std::move(n);
    return out;
}

namespace {

// Shared scaffolding for the one-uniformizer splittings: build the springer
// node from the two already-decided residue parts.
DecisionNode springer_node(NodeForm input, std::string field, std::vector<std::string> coeffs,
                           std::string detail, Verdict v1, Verdict v2) {
    DecisionNode n;
    n.input = std::move(input);
    n.field = std::move(field);
    n.coeffs = std::move(coeffs);
    n.rule = rules::kSpringer;
    n.detail = std::move(detail);
    n.isotropic = v1.isotropic || v2.isotropic;
    n.parts.push_back(std::move(v1.chain));
    n.parts.push_back(std::move(v2.chain));
    return n;
}

}  // namespace

Verdict decide_local(const LocalForm& q) {
    Verdict out;
    if (q.coeffs.empty()) {
        out.chain = empty_leaf(q, local_field_tag(q.K));
        return out;
    }
    auto d = springer_decompose(q);
    auto v1 = decide_finite(d.q1);
    auto v2 = decide_finite(d.q2);
    out.isotropic = v1.isotropic || v2.isotropic;
    out.chain = springer_node(q, local_field_tag(q.K), render_coeffs(q),
                              std::string("uniformizer ") + (q.K->e() == 2 ? "g" : "p"),
                              std::move(v1), std::move(v2));
    return out;
}

Verdict decide_qp_sym(const QpSymForm& q) {
    Verdict out;
    if (q.coeffs.empty()) {
        out.chain = empty_leaf(q, "Q_" + std::to_string(q.p));
        return out;
    }
    auto d = springer_decompose(q);
    auto v1 = decide_finite(d.q1);
    auto v2 = decide_finite(d.q2);
    out.isotropic = v1.isotropic || v2.isotropic;
    out.chain = springer_node(q, "Q_" + std::to_string(q.p), render_coeffs(q),
                              "uniformizer p", std::move(v1), std::move(v2));
    return out;
}

Verdict decide_ffz_completion(const FFRForm& q, const FFPlace& v, const std::string& var) {
    std::string tag = q.F ? finite_field_tag(q.F) + "(" + var + ") at " +
                                ffplace_to_string(v, var, q.F->p())
                          : "";
    Verdict out;
    if (q.coeffs.empty()) {
        out.chain = empty_leaf(FfzCompletionInput{q, v, var}, tag);
        return out;
    }
    auto d = springer_decompose(q, v);
    auto v1 = decide_finite(d.q1);
    auto v2 = decide_finite(d.q2);
    out.isotropic = v1.isotropic || v2.isotropic;
    out.chain = springer_node(FfzCompletionInput{q, v, var}, std::move(tag), render_coeffs(q, var),
                              "uniformizer " + ffplace_to_string(v, var, q.F->p()), std::move(v1),
                              std::move(v2));
    return out;
}

Verdict decide_ffz_global(const FFRForm& q, const std::string& var) {
    Verdict out;
    std::string tag = (q.F ? finite_field_tag(q.F) : std::string("F_?")) + "(" + var + ")";
    if (q.coeffs.empty()) {
        out.chain = empty_leaf(FfzGlobalInput{q, var}, tag);
        return out;
    }
    validate(q);
    DecisionNode n;
    n.input = FfzGlobalInput{q, var};
    n.field = tag;
    n.coeffs = render_coeffs(q, var);
    if (q.coeffs.size() == 1) {
        n.rule = rules::kRank1;
        n.detail = "a*x^2 has no nontrivial zero";
        n.isotropic = false;
    } else if (q.coeffs.size() == 2) {
        FFRatFunc d = ffr_neg(ffr_mul(q.coeffs[0], q.coeffs[1]));
        bool sq = ffq_ratfunc_is_square(d);
        n.rule = rules::kGlobalSquareTest;
        n.detail = "-(a1*a2) = " + ffr_to_string(d, var) + (sq ? ", a square" : ", a nonsquare");
        n.isotropic = sq;
    } else if (q.coeffs.size() >= 5) {
        n.rule = rules::kRankGe5;
        n.detail = "rank >= 5 over a rational function field with finite residue fields";
        n.isotropic = true;
    } else {
        // ranks 3 and 4: check the finitely many bad places; everywhere else
        // all coefficients are units and the unit residue form has rank >= 3
        n.rule = rules::kHasseMinkowski;
        std::set<FFPlace> bad;
        for (const auto& c : q.coeffs)
            for (const auto& v : ffr_support(c, false)) bad.insert(v);
        FFPlace inf;
        inf.at_infinity = true;
        bad.insert(inf);
        bool aniso = false;
        for (const auto& v : bad) {
            auto vv = decide_ffz_completion(q, v, var);
            bool bad_here = !vv.isotropic;
            n.parts.push_back(std::move(vv.chain));
            if (bad_here) {
                aniso = true;
                n.detail = "anisotropic over the completion at " +
                           ffplace_to_string(v, var, q.F->p());
                break;
            }
        }
        if (!aniso)
            n.detail = "isotropic at every bad place; unit residue forms of rank >= 3 "
                       "settle the rest";
        n.isotropic = !aniso;
    }
    out.isotropic = n.isotropic;
    out.chain = std::move(n);
    return out;
}

Verdict decide_qt_completion(const QtForm& q, const Place& pl, int precision,
                             const std::string& var) {
    std::string tag =
        "Q_" + std::to_string(q.p) + "(" + var + ") at " + place_to_string(pl, var);
    Verdict out;
    if (q.coeffs.empty()) {
        out.chain = empty_leaf(QtCompletionInput{q, pl, precision, var}, tag);
        return out;
    }
    validate(q);
    Verdict v1, v2;
    std::string unif;
    switch (pl.kind) {
        case PlaceKind::Horizontal:
            if (pl.atom.deg == 1) {
                auto d = qt_springer_rat(q, pl);
                v1 = decide_qp_sym(d.q1);
                v2 = decide_qp_sym(d.q2);
            } else {
                auto K = ext_field_for_atom(q.p, pl.atom, precision);
                auto d = qt_springer_ext(q, pl.atom, K);
                v1 = decide_local(d.q1);
                v2 = decide_local(d.q2);
            }
            unif = "uniformizer " + place_to_string(pl, var);
            break;
        case PlaceKind::Infinity: {
            auto d = qt_springer_rat(q, pl);
            v1 = decide_qp_sym(d.q1);
            v2 = decide_qp_sym(d.q2);
            unif = "uniformizer 1/" + var;
            break;
        }
        case PlaceKind::SpecialFibre: {
            auto Fp = std::make_shared<const FiniteField>(q.p);
            auto d = qt_springer_ffz(q, Fp);
            v1 = decide_ffz_global(d.q1, var);
            v2 = decide_ffz_global(d.q2, var);
            unif = "uniformizer p (Gauss valuation)";
            break;
        }
    }
    out.isotropic = v1.isotropic || v2.isotropic;
    out.chain = springer_node(QtCompletionInput{q, pl, precision, var}, std::move(tag),
                              render_coeffs(q, var), std::move(unif), std::move(v1),
                              std::move(v2));
    return out;
}

namespace {

struct ReplayVisitor {
    const DecisionNode& node;

    bool operator()(const std::monostate&) const { return false; }
    bool operator()(const FqForm& q) const { return same_chain(decide_finite(q).chain, node); }
    bool operator()(const LocalForm& q) const { return same_chain(decide_local(q).chain, node); }
    bool operator()(const QpSymForm& q) const { return same_chain(decide_qp_sym(q).chain, node); }
    bool operator()(const FfzGlobalInput& in) const {
        return same_chain(decide_ffz_global(in.q, in.var).chain, node);
    }
    bool operator()(const FfzCompletionInput& in) const {
        return same_chain(decide_ffz_completion(in.q, in.v, in.var).chain, node);
    }
    bool operator()(const QtCompletionInput& in) const {
        return same_chain(decide_qt_completion(in.q, in.pl, in.precision, in.var).chain, node);
    }
};

}  // namespace

bool replay_chain(const DecisionNode& node) {
    if (!std::visit(ReplayVisitor{node}, node.input)) return false;
    // each sub-decision must also replay from its own stored input
    for (const auto& part : node.parts)
        if (!replay_chain(part)) return false;
    return true;
}

}  // namespace quadform
