#ifndef LGL_FIGURES_HPP
#define LGL_FIGURES_HPP

#include "lgl/laurent.hpp"

#include <cstdint>
#include <string>

namespace lgl {

enum class fig_format { dot, tikz };

/// Digraph of the sign regions of the hyperplane sum(k) = m: one node per
/// realizable sign pattern, one red arrow per single-coordinate promotion
/// from negative to nonnegative. The all-nonnegative pattern exists only for
/// m >= 0 and the all-negative one only for m <= -n.
std::string sign_region_figure(int n, std::int64_t m, fig_format format);

/// Monomial-level action graph on a window: nodes are the degree-m exponents
/// with |k[i]| <= bound, arrows are the E_ab moves with nonzero coefficient.
/// TikZ output is only available for n = 2 (points on the line k1+k2 = m).
std::string action_lattice_figure(int n, std::int64_t m, std::int64_t bound,
                                  const alpha_param& alpha, fig_format format);

} // namespace lgl

#endif
