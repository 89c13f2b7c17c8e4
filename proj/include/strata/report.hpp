#pragma once

// JSON reports. All reports are deterministic: no unordered containers are
// iterated, and timing is only emitted on request.

#include "strata/chain.hpp"
#include "strata/errors.hpp"
#include "strata/matroid.hpp"
#include "strata/stratify.hpp"
#include "strata/taut.hpp"

#include <json.hpp>

#include <string>

namespace strata {

using nlohmann::json;

json stratification_report(const Stratification& strat);
json chain_report(const CoordinateChainComplex& chain);
json matroid_report(const OrientedMatroidClass& matroid);
json invariant_report(const TautInvariant& inv);
json certificate_report(const HomeomorphismCertificate& cert);
json offending_report(const std::vector<OffendingCircle>& offending);

/// Letters are written as signed 1-based stratum ids: +(e+1) along the
/// generator orientation of 1-stratum e, -(e+1) against it.
json word_to_json(const Word& w);
json attachment_to_json(const BoundaryAttachment& a);

struct AnalyzeOptions {
    std::size_t max_ground = kDefaultGroundCap;
    bool timing = false;
};

/// Raised when the strata chain complex and the simplicial oracle disagree on
/// the top homology.
class HomologyMismatch : public InternalError {
public:
    using InternalError::InternalError;
};

/// Full pipeline report. Throws UnsupportedError for dimension > 3 and
/// HomologyMismatch if the two top-homology routes disagree.
json analyze(const SimplicialComplex& complex, const AnalyzeOptions& options = {});

/// Plain "path: value" lines for --format text.
std::string render_text(const json& report);

} // namespace strata
