#pragma once

#include <string>

#include <json.hpp>

#include "strata/alcove.hpp"
#include "strata/oracle.hpp"
#include "strata/sigma.hpp"

namespace strata {

using json = nlohmann::json;

json class_to_json(const Group& g, const SigmaClass& b);
json cert_to_json(const Group& g, const AlcoveCertificate& cert);
json table_to_json(const Group& g, const StrataTable& t);
std::string table_to_csv(const Group& g, const StrataTable& t);
json reduction_to_json(const Group& g, const ReductionResult& r);

// Root-datum JSON: either the shorthand {"type":"GL","rank":n} or the full
// schema {"name","ambient_rank","simple_roots","simple_coroots",
// "delta":{"perm":[1-based],"matrix":[[int]]},"cochar_basis" optional}.
std::shared_ptr<const RootDatum> datum_from_json(const json& j);
std::shared_ptr<const RootDatum> datum_from_file(const std::string& path);

// --group GL:n | SL:n | SP:2n | file:PATH, --delta id | perm:i1,i2,...
std::shared_ptr<const RootDatum> datum_from_cli(const std::string& group,
                                                const std::string& delta);

}  // namespace strata
