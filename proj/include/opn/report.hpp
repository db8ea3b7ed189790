#pragma once

// JSON encodings of every result type and the text rendering used by the CLI.
// Text is rendered from the JSON alone, so both outputs always agree.

#include "opn/contribution.hpp"
#include "opn/lemma_lab.hpp"
#include "opn/lp.hpp"
#include "opn/polynomial.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace opn {

using Json = nlohmann::json;

Json to_json(const SearchReport& report);
Json to_json(const ContributionProfile& profile);
Json link_json(const ContributionProfile& profile, const LinkedPrime& link);
Json collisions_json(ClassTag cls, std::uint64_t min_share, std::uint64_t bound, const std::vector<FiberReport>& fibers);
Json to_json(const FiberReport& fiber);
Json to_json(const PropositionCheck& check);
Json reconstruct_json(const BigInt& d, const std::optional<ReconstructedTriple>& triple);

Json to_json(const Certificate& cert);
Json to_json(const BoundResult& result);
Json to_json(const ConstraintSystem& system);
/// Certificate plus "result"; what `lp solve --out` writes.
Json solve_json(const Optimum& optimum);
/// Reads {"variant", "multipliers"}; other keys are ignored. Throws InvalidInput.
Certificate certificate_from_json(const Json& j);

/// "99/37·ω − 187/37 ≤ Ω".
std::string render_bound(const Rational& a, const Rational& b);

/// Deterministic text for any JSON produced above (dispatch on "kind").
std::string render(const Json& j);

} // namespace opn
