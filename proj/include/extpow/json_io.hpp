#pragma once

#include <json.hpp>

#include "extpow/derivation.hpp"
#include "extpow/group_word.hpp"
#include "extpow/ideal.hpp"
#include "extpow/level.hpp"
#include "extpow/stabilizer.hpp"
#include "extpow/weight_poly.hpp"
#include "extpow/zfactor.hpp"

namespace extpow {

using Json = nlohmann::json;

Json ring_to_json(const RingPtr& ring);
RingPtr ring_from_json(const Json& j);
/// Flag grammar: z | zmod:k | fp:p | poly[:VAR[,VAR...]][@base]; bare "poly"
/// means poly:xi,zeta@z.
RingPtr parse_ring_flag(const std::string& flag);

Json elem_to_json(const RingElem& x);
RingElem elem_from_json(const Json& j, const RingPtr& ring);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, RingPtr ring_hint = nullptr);

Json group_word_to_json(const GroupWord& w);
GroupWord group_word_from_json(const Json& j, const RingPtr& ring,
                               std::size_t size);

Json ext_word_to_json(const ExtWord& w);
ExtWord ext_word_from_json(const Json& j, const RingPtr& ring);

Json ext_letter_to_json(const ExtLetter& l);
ExtLetter ext_letter_from_json(const Json& j, const RingPtr& ring);

Json ideal_to_json(const Ideal& ideal);
Json derivation_to_json(const Derivation& d);
Json weight_poly_to_json(const WeightPoly& p);
Json quadric_system_to_json(const QuadricSystem& sys);
Json zfactorization_to_json(const ZFactorization& f);
Json stabilizer_report_to_json(const StabilizerReport& rep);

std::vector<LevelGenerator> level_generators_from_json(const Json& j,
                                                       const RingPtr& ring);

}  // namespace extpow
