#ifndef LGL_JSON_IO_HPP
#define LGL_JSON_IO_HPP

#include "lgl/action.hpp"
#include "lgl/filtration.hpp"
#include "lgl/ladder.hpp"
#include "lgl/laurent.hpp"
#include "lgl/modules.hpp"
#include "lgl/oracle.hpp"
#include "lgl/rational.hpp"

#include <json.hpp>

namespace lgl::io {

using json = nlohmann::json;

// Scalars travel as decimal strings so 64-bit transports never overflow:
// {"re": {"num": "3", "den": "2"}, "im": {"num": "0", "den": "1"}}.
json to_json(const gaussian_rational& v);
gaussian_rational gr_from_json(const json& j);

json to_json(const exponent& k);
exponent exponent_from_json(const json& j);

json to_json(const index_set& s);
index_set index_set_from_json(const json& j);

// {"n": int, "terms": [{"exps": [...], "coeff": {...}}, ...]}, terms in
// lexicographic exponent order.
json to_json(const laurent_poly& f);
laurent_poly poly_from_json(const json& j);

json to_json(const alpha_param& alpha);
alpha_param alpha_from_json(const json& j);

/// Twist entries before normalization; accepts scalar objects or literal
/// strings such as "1/2+1/3i".
std::vector<gaussian_rational> raw_alpha_from_json(const json& j);

// {"prefactor": {...}, "factors": [[a,b], ...]}; from_json also accepts any
// object with a "word" field (e.g. an emitted ladder certificate).
json to_json(const uword& w);
uword uword_from_json(const json& j);

json to_json(const module_id& id);
module_id module_id_from_json(const json& j);

json to_json(const ladder_certificate& cert);
ladder_certificate ladder_from_json(const json& j);

json to_json(const separation_certificate& cert);

json hw_to_json(const hw_certificate& cert, const alpha_param& alpha);

json to_json(const poset_index& idx);
json to_json(const axiom_report& report);
json to_json(const reach_report& report);
json to_json(const direct_sum_report& report);
json to_json(const indecomp_report& report);
json to_json(const closure_report& report);

// {"n": [..], "m_range": [lo, hi], "B": int, "alphas": [[..], ..]};
// from_json also accepts an emitted sweep report ({"config": ...}).
json to_json(const sweep_config& config);
sweep_config sweep_config_from_json(const json& j);
json to_json(const sweep_report& report);

json weight_to_json(const weight& w);

/// Full classification of V^alpha(m,J): generator case label, zero/collapse
/// info, finite-dimensionality, the dimension count with its m+1 comparison
/// flag, and the highest-weight certificate when one exists.
json classification_report(const alpha_param& alpha, const exponent& alpha_shift, std::int64_t m,
                           const index_set& J);

} // namespace lgl::io

#endif
