#pragma once
// JSON encoding of the core value types for the command-line tool.  Exact
// values never pass through floating point: rationals and big integers are
// encoded as decimal strings ("5", "-3/2"), compositions as plain integer
// arrays, elements as ordered term lists, and matrices as arrays of integer
// strings.  Emission order follows each container's canonical order, so a
// fixed value always serializes to the same bytes.
//
// Schemas (ordered_json objects keep the key order shown):
//   composition        [1,2,3]
//   rational / integer "p", "p/q"
//   QElement           {"algebra":"qsymm","terms":[{"word":[..],"coeff":"c"},..]}
//   AlgebraElement     {"algebra":"words","terms":[{"word":[{"letter":"Z","index":1},..],"coeff":"c"},..]}
//   QTensor            {"algebra":"qsymm_tensor","terms":[{"left":[..],"right":[..],"coeff":"c"},..]}
//   TensorElement      {"algebra":"words_tensor","terms":[{"left":[..],"right":[..],"coeff":"c"},..]}
//   IntMatrix          [["1","0"],["-2","1"]]
//   VerifyReport       {"suite":"...","maxweight":6,"seed":0,"clauses":[
//                         {"name":"...","pass":true,"witness":"..."}],"all_pass":true}

#include <json.hpp>

#include <string>

#include "nsq/algebra.hpp"
#include "nsq/checks.hpp"
#include "nsq/lattice.hpp"
#include "nsq/qsymm.hpp"
#include "nsq/words.hpp"

namespace nsq {

using Json = nlohmann::ordered_json;

std::string rat_string(const Rat& q);
Rat rat_from_string(const std::string& s);

Json json_of(const Composition& a);
Json json_of(const QElement& x);
Json json_of(const AlgebraElement& x);
Json json_of(const QTensor& t);
Json json_of(const TensorElement& t);
Json json_of(const IntMatrix& m);
Json json_of(const VerifyReport& r);

Composition composition_from_json(const Json& j);
QElement qelement_from_json(const Json& j);
AlgebraElement algebra_element_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);

} // namespace nsq
