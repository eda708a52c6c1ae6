#include "bugonomics/campaign.hpp"

namespace bugonomics {

void CampaignReport::check_funnel() const
{
    // Monotonicity over whichever counts are present, in funnel order.
    const std::optional<std::int64_t>* chain[] = {
        &raw_candidates, &deduplicated_candidates, &submitted_reports,
        &accepted_findings};
    const char* names[] = {"raw_candidates", "deduplicated_candidates",
                           "submitted_reports", "accepted_findings"};
    std::optional<std::int64_t> prev;
    const char* prev_name = nullptr;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!chain[i]->has_value()) {
            continue;
        }
        std::int64_t v = **chain[i];
        if (v < 0) {
            throw domain_error(std::string(names[i]) + " must be non-negative");
        }
        if (prev && v > *prev) {
            throw domain_error(std::string(names[i]) + " exceeds " + prev_name);
        }
        prev = v;
        prev_name = names[i];
    }
    if (severity && accepted_findings) {
        if (severity->high && severity->moderate && severity->low) {
            std::int64_t sum = *severity->high + *severity->moderate + *severity->low;
            if (sum > *accepted_findings) {
                throw domain_error("severity split exceeds accepted findings");
            }
            if (severity->exhaustive && sum != *accepted_findings) {
                throw domain_error("exhaustive severity split does not sum to "
                                   "accepted findings");
            }
        }
    }
    if (exploitable_count && accepted_findings &&
        *exploitable_count > *accepted_findings) {
        throw domain_error("exploitable count exceeds accepted findings");
    }
}

} // namespace bugonomics
