#include "bugonomics/core.hpp"

namespace bugonomics {

void FunnelCounts::validate() const
{
    if (raw_candidates < 0 || deduplicated_candidates < 0 ||
        submitted_reports < 0 || accepted_findings < 0) {
        throw domain_error("funnel counts must be non-negative");
    }
    if (raw_candidates < deduplicated_candidates) {
        throw domain_error("deduplicated candidates exceed raw candidates");
    }
    if (deduplicated_candidates < submitted_reports) {
        throw domain_error("submitted reports exceed deduplicated candidates");
    }
    if (submitted_reports < accepted_findings) {
        throw domain_error("accepted findings exceed submitted reports");
    }
    const auto& sev = severity;
    for (const auto& part : {sev.high, sev.moderate, sev.low}) {
        if (part && *part < 0) {
            throw domain_error("severity counts must be non-negative");
        }
    }
    if (sev.high && sev.moderate && sev.low) {
        std::int64_t sum = *sev.high + *sev.moderate + *sev.low;
        if (sum > accepted_findings) {
            throw domain_error("severity split exceeds accepted findings");
        }
        if (sev.exhaustive && sum != accepted_findings) {
            throw domain_error("severity split declared exhaustive but does not "
                               "sum to accepted findings");
        }
    }
    if (exploitable) {
        if (*exploitable < 0) {
            throw domain_error("exploitable count must be non-negative");
        }
        if (*exploitable > accepted_findings) {
            throw domain_error("exploitable count exceeds accepted findings");
        }
    }
}

} // namespace bugonomics
