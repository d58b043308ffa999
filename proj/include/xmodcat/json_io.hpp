#pragma once

#include <string>

#include "json.hpp"
#include "xmodcat/catgroup.hpp"
#include "xmodcat/cochain.hpp"
#include "xmodcat/crossed_module.hpp"
#include "xmodcat/extension.hpp"
#include "xmodcat/report.hpp"

namespace xmodcat::io {

using Json = nlohmann::json;

/// Parses text; throws ParseError naming line and column.
Json parse(const std::string& text);

/// {"order": n, "table": [[...]]}; {"name": "S3"} is accepted on input.
Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j, const std::string& where);

/// {"group": <group>, "gamma": <group>, "act": [[...]]}
Json to_json(const GammaModule& m);
GammaModule gamma_module_from_json(const Json& j, const std::string& where);

/// {"B","D","d","theta","eta","gamma","actB","actD"}; missing theta/eta/actions
/// default to trivial ones.
Json to_json(const BraidedGammaCrossedModule& m);
BraidedGammaCrossedModule module_from_json(const Json& j, const std::string& where);

/// {"domain": "Q2+QGamma", "values": {"pairs": [[...]], "grades": [[...]]}}
Json to_json(const SymmetricCochain2& f);
SymmetricCochain2 cochain2_from_json(const Json& j, const GammaModule& q, const GammaModule& b,
                                     const std::string& where);

/// {"M","N","values": {"assoc","braid","tensor","compose"}} with flat arrays;
/// missing value arrays default to zero.
Json to_json(const Cochain3& h);
Cochain3 cochain3_from_json(const Json& j, const std::string& where);

/// {"objects": n, "morphisms": [[src,dst,payload,grade],...], "tensor": ...,
/// "constraints": ...}
Json to_json(const GradedCatGroup& g);

Json to_json(const AxiomReport& r);
Json to_json(const GammaModuleExtension& e);
Json to_json(const CrossedMorphism& m);

/// Integer-table helpers with schema errors naming the path.
std::vector<Elem> flat_table(const Json& j, const std::string& where);
std::vector<Elem> int_list(const Json& j, const std::string& where);

}  // namespace xmodcat::io
