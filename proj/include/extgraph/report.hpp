#pragma once

#include <json.hpp>

#include "extgraph/extremal.hpp"
#include "extgraph/lattice.hpp"
#include "extgraph/metric.hpp"
#include "extgraph/search.hpp"
#include "extgraph/spectral.hpp"
#include "extgraph/surface.hpp"

// JSON views of the library's reports. Exact values are strings ("p/q" or
// "p") so they survive the round trip without loss.
namespace extgraph {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
Json rationals_json(const std::vector<Rational>& qs);
// Accepts strings and integers. Throws DomainError otherwise.
Rational rational_from_json(const Json& j);

// "0.375" when the denominator is 2^a 5^b, otherwise "p/q".
std::string decimal_string(const Rational& q);

Json to_json(const TreeReport& r);
Json to_json(const CycleSet& c);
Json to_json(const MeridianSet& s);
Json to_json(const CutReport& r);
Json to_json(const ExtremalCertificate& c);
ExtremalCertificate certificate_from_json(const Json& j);
Json to_json(const AscentResult& r);
Json to_json(const EigenCriticalityReport& r);
Json to_json(const JacobianReport& r);
Json to_json(const EmbeddedGraph& e);
Json to_json(const SwitchScan& s);
Json to_json(const SigmaValue& s, int k);
Json to_json(const LatticeEntropy& e);
Json to_json(const CanonicalForm& c);

// Summary of the cheap-to-moderate invariants of one graph: tree number,
// girth, diameter, cut constants (n <= 24), spectra and regularity data.
Json invariants(const WeightPoint& w);

}  // namespace extgraph
