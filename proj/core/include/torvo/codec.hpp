#pragma once

#include <torvo/representation.hpp>

#include <nlohmann/json.hpp>

namespace torvo::codec {

using json = nlohmann::json;

json encode(const Scalar& x);
Scalar decode_scalar(const json& j);

json encode(const LatticeVector& v);
LatticeVector decode_lattice_vector(const json& j, const LatticeConfig& cfg);

json encode(const CreationMonomial& u);
CreationMonomial decode_monomial(const json& j);

json encode(const LatticeFockState& s);
LatticeFockState decode_lattice_state(const json& j, const LatticeConfig& cfg);

json encode(const BosonState& s);
BosonState decode_boson_state(const json& j, const BosonSpace& space);

json encode(const TensorState& s);
TensorState decode_tensor_state(const json& j, const RepConfig& cfg);

json encode(const GlElement& x);
GlElement decode_gl_element(const json& j, const GlConfig& cfg);

json encode(const ToroidalElement& x);
ToroidalElement decode_toroidal(const json& j, const ToroidalConfig& cfg);

json encode(const RepOperator& a);
RepOperator decode_operator(const json& j, const RepConfig& cfg);

json encode(const RepConfig& cfg);
RepConfig decode_config(const json& j);

}  // namespace torvo::codec
