#ifndef HYPSUM_SERIALIZE_HPP
#define HYPSUM_SERIALIZE_HPP

#include <json.hpp>

#include <hypsum/asymptotics.hpp>
#include <hypsum/bessel.hpp>
#include <hypsum/hyper.hpp>
#include <hypsum/identity.hpp>

namespace hypsum
{

using Json = nlohmann::ordered_json;

// {"a": ["p/q", ...], "b": [...], "m": [ints], "n": [ints]}. Throws
// Error(ParseError) on schema violations.
IdentityInstance instance_from_json(const Json &j);
Json to_json(const IdentityInstance &inst);
Json to_json(const DerivedQuantities &d);
// {"-1": "2/3", ...}; keys in increasing exponent order.
Json beta_map_json(const BetaTable &table);
Json to_json(const BetaTable &table);
Json to_json(const VerificationReport &report);
Json to_json(const Lemma1Report &report);
Json to_json(const ResidueCheck &check);
Json to_json(const BesselReport &report);

} // namespace hypsum

#endif
