#pragma once

#include "orex/classify.hpp"
#include "orex/multi_derivation.hpp"
#include "orex/witnesses.hpp"

#include "json.hpp"

namespace orex {

// Serializers for the library's result types. All exact values (scalars,
// polynomials, skew polynomials) are emitted as strings in the same syntax
// the parsers accept, so reports round-trip losslessly. Certificates carry a
// "verification" object whose checks are recomputed from the serialized data
// at emission time, never copied from earlier state.
using Json = nlohmann::ordered_json;

Json describe(const DerivationSpec& spec);
Json describe(const NormalForm& form);
Json describe(const DiamondVerdict& verdict);
Json describe(const EssentialWitness& witness, const Scalar& alpha);
Json describe(const ChainCertificate& cert);
Json describe(const MaximalityCertificate& cert);
Json describe(const LocalNilpotency& result);
Json describe(const LieDatum& datum);

// Envelope shared by every CLI report: tool identity, the subcommand, an
// echo of the parsed input, and the result payload. timing_ms is wall-clock
// and is the only field allowed to differ between identical runs.
Json make_report(const std::string& command, Json input, Json result,
                 double timing_ms);

}  // namespace orex
