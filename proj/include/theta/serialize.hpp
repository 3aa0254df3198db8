#pragma once

#include <json.hpp>

#include "theta/packing.hpp"
#include "theta/theta_engine.hpp"

namespace theta {

using Json = nlohmann::json;

Json to_json(const ThetaCertificate& c);
Json to_json(const MinorModelCertificate& c);
Json to_json(const ProtrusionCertificate& c);
Json to_json(const PackingCertificate& c);
Json to_json(const RootedTreePartition& tp);
Json to_json(const DistanceDecomposition& dd);
Json to_json(const GroupedPartition& gp, const Multigraph& g);

ThetaCertificate theta_from_json(const Json& j);
MinorModelCertificate minor_from_json(const Json& j);
ProtrusionCertificate protrusion_from_json(const Json& j);
PackingCertificate packing_from_json(const Json& j);
RootedTreePartition tree_partition_from_json(const Json& j);

/// Tagged documents for driver outcomes; params are echoed for re-checking.
Json outcome_document(const Outcome4& out, int r, int delta, long long z);
Json outcome_document(const Outcome5& out, int r, int w, long long z);
Json packing_document(const PackingCertificate& c, int k, int r);

/// Re-checks a tagged certificate document against g.
VerifyReport verify_document(const Multigraph& g, const Json& doc);

/// Two-space indented, keys sorted, trailing newline.
std::string render(const Json& j);

}  // namespace theta
