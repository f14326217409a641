#pragma once

#include <json.hpp>

#include "sdop/duality.hpp"
#include "sdop/fock.hpp"
#include "sdop/fps.hpp"
#include "sdop/glinf.hpp"
#include "sdop/sdalg.hpp"

namespace sdop {

nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SdElem& e);
SdElem sdelem_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WinMat& m);
WinMat winmat_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FockState& v);
FockState fock_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Fps& f);
Fps fps_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HwWeight& w);
HwWeight hw_weight_from_json(const nlohmann::json& j);

}  // namespace sdop
