#pragma once

#include <optional>

#include "core/decision.hpp"
#include "core/graph.hpp"

namespace strongequiv::witnesses {

// True iff exactly one of g|f, h|f has the selected property.
bool verify_witness(const PropertySelector& prop, const Graph& g, const Graph& h,
                    const Graph& f);

// Builds a separating extension for a pair the corresponding decider rejects.
// Returns nullopt when the pair is equivalent; throws Unsupported for
// pattern classes without a characterization, and NoWitness if a
// construction fails to verify (an internal defect, not a user error).
// Every returned witness passes verify_witness.
std::optional<Witness> witness_for(const PropertySelector& prop, const Graph& g,
                                   const Graph& h);

}  // namespace strongequiv::witnesses
