#pragma once

#include <stdexcept>
#include <string>

namespace quadform {

// Domain failures are loud: every error carries a machine-readable code so
// callers (CLI, tests) can map it to an exit status without string matching.
enum class errc {
    precision_exhausted,   // p-adic precision too low to certify a predicate
    non_unit,              // residue requested for an element of nonzero valuation
    unsupported,           // field/place/operation outside the supported fragment
    non_normal_crossings,  // coefficient not monomial*unit at the closed point
    degenerate,            // zero or otherwise inadmissible coefficient
    budget_exceeded,       // search budget exhausted without a decision
    invalid_input,         // parse/validation failure
    factorization,         // atom could not be certified irreducible/split
    fixture_mismatch,      // pinned expectation differs from computed value
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::precision_exhausted: return "precision_exhausted";
        case errc::non_unit: return "non_unit";
        case errc::unsupported: return "unsupported";
        case errc::non_normal_crossings: return "non_normal_crossings";
        case errc::degenerate: return "degenerate";
        case errc::budget_exceeded: return "budget_exceeded";
        case errc::invalid_input: return "invalid_input";
        case errc::factorization: return "factorization";
        case errc::fixture_mismatch: return "fixture_mismatch";
    }
    return "unknown";
}

}  // namespace quadform
