#pragma once

#include <json.hpp>

#include "intermute/decide.hpp"
#include "intermute/form_sequence.hpp"
#include "intermute/grid.hpp"
#include "intermute/legitimacy.hpp"
#include "intermute/semantics.hpp"

namespace intermute {

using Json = nlohmann::json;

Json to_json(const ConnOccurrence& x);
Json to_json(const LegitimacyWitness& w);
Json to_json(const Relation& r);
Json to_json(const IntMatrix& m);
Json to_json(const Verdict& v);
Json to_json(const ExistsAnswer& a);
Json to_json(const PurityReport& r);
Json to_json(const TBLR& t);
Json to_json(const Grid& g);

}  // namespace intermute
