#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laukit/address.hpp"
#include "laukit/io.hpp"

namespace laukit {

// The property lab exercises the preservation statement empirically: for a
// predicate Q it tests the three hypotheses — Q survives unitization, Q
// survives direct sums, Q passes to finite-codimension subalgebras — and the
// conclusion that Q survives character Lau products. Each section counts its
// cases and records every failure with a replayable CLI command. The lab
// demonstrates; it never proves.

enum class Predicate { unital, commutative, semisimple };

std::optional<Predicate> parse_predicate(const std::string& name);
const char* predicate_name(Predicate p);

struct LabFailure {
    std::string description;  // names the construction inputs
    std::string replay;       // CLI command reproducing the verdict
};

struct LabSection {
    long cases = 0;
    std::vector<LabFailure> failures;
};

struct LabReport {
    std::string predicate;
    LabSection h1_unitization;
    LabSection h2_direct_sum;
    LabSection h3_finite_codim;
    LabSection conclusion_lau;

    bool all_passed() const {
        return h1_unitization.failures.empty() && h2_direct_sum.failures.empty() &&
               h3_finite_codim.failures.empty() && conclusion_lau.failures.empty();
    }
};

struct LabInputs {
    std::vector<CatalogSpec> corpus;                            // H1; H2 uses pairs
    std::vector<std::pair<CatalogSpec, CatalogSpec>> pairs;     // H2
    std::vector<LauTriple> triples;                             // conclusion
    // H3 runs over shipped_h3_instances().
};

LabInputs shipped_lab_inputs();

LabReport run_lab(Predicate p, const LabInputs& inputs);
LabReport run_lab(Predicate p);

Json lab_report_to_json(const LabReport& rep);

}  // namespace laukit
