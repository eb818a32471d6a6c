#pragma once
// Named verification suites behind the command-line tool.  Each suite
// re-runs a bundle of the library's defining identities and structure
// theorems at a configurable weight bound and reports one pass/fail clause
// per property, with a short witness string (counts on success, the first
// offending case on failure).
//
// Suites and their default / maximum bounds (weights beyond the maximum are
// clamped; every run finishes at desk scale):
//   newton    (8 / 10)  Newton primitive families: primitivity, the defining
//                       recursions, mirror symmetry, leading coefficients.
//   dps       (6 / 8)   divided power sequences: the standard curve, the
//                       Lyndon-word sequences, and their Newton primitives.
//   isobaric  (6 / 6)   bi-isobaric decomposition of the commutator and
//                       additive targets: exact reconstruction, integrality,
//                       isobaric bidegrees, ray factors as two-variable
//                       sequences, leading terms, index division on the
//                       commutator table and the Newton-row law on the
//                       additive one.
//   basis     (5 / 6)   the primitive lattice: Lyndon primitives span it
//                       exactly, ranks match the Witt numbers, leading terms.
//   freeness  (6 / 8)   generator monomials are a basis: unimodular change
//                       of basis and randomized coordinate round trips.
//   duality   (6 / 8)   the pairing: triangularity against generators,
//                       adjointness, multiplication/comultiplication duality.
//   frobven   (8 / 8)   Frobenius and Verschiebung families: composition
//                       laws, homogeneity, adjointness, the mod-p congruence
//                       and descent to symmetric functions.
//   6.15      (6 / 6)   the Verschiebung structure suite on the generator
//                       filtration, for n in {2,3} (or one n if given), plus
//                       the word-filtration comparison.

#include <string>
#include <vector>

#include "nsq/generators.hpp"

namespace nsq {

struct VerifyReport {
    std::string suite;
    int maxweight = 0;
    int n = 0;  // 0 when the suite takes no family parameter
    unsigned seed = 0;
    std::vector<SuiteClause> clauses;
    bool all_pass = false;
};

const std::vector<std::string>& verify_suite_names();

// Run one suite.  maxweight <= 0 selects the suite's documented default; n
// parameterizes the family suite ("6.15"; 0 = both 2 and 3); seed drives the
// randomized clauses.  Throws std::invalid_argument on an unknown name.
VerifyReport run_verify_suite(const std::string& name, int maxweight, int n,
                              unsigned seed);

} // namespace nsq
