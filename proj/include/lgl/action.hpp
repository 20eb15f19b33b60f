#ifndef LGL_ACTION_HPP
#define LGL_ACTION_HPP

#include "lgl/laurent.hpp"
#include "lgl/parallel.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lgl {

/// The matrix unit E_{row,col} of gl(n); indices are 1-based.
struct matrix_unit {
    int row = 1;
    int col = 1;
    friend bool operator==(const matrix_unit&, const matrix_unit&) = default;
};

/// Ordered product of matrix units with a scalar prefactor, an element of the
/// enveloping algebra used as a certificate. Factors are stored left-to-right
/// as written and applied right-to-left (the rightmost factor acts first).
class uword {
public:
    uword() : prefactor_(1) {}
    uword(gaussian_rational prefactor, std::vector<matrix_unit> factors)
        : prefactor_(std::move(prefactor)), factors_(std::move(factors)) {}

    static uword identity() { return uword(); }

    const gaussian_rational& prefactor() const { return prefactor_; }
    const std::vector<matrix_unit>& factors() const { return factors_; }
    bool is_identity() const { return factors_.empty() && prefactor_ == gaussian_rational(1); }

private:
    gaussian_rational prefactor_;
    std::vector<matrix_unit> factors_;
};

/// Eigenvalue vector k + alpha of the Cartan subalgebra on x^k.
using weight = std::vector<gaussian_rational>;

/// Twisted action of one matrix unit on a monomial:
///   E_ab . x^k = (k[b] + twist[b]) x^(k + e_a - e_b).
/// The twist may be any complex vector; module predicates elsewhere require
/// the normalized alpha_param form, the action itself does not.
laurent_poly act(const matrix_unit& u, const laurent_poly& f,
                 const std::vector<gaussian_rational>& twist);
laurent_poly act(const matrix_unit& u, const laurent_poly& f, const alpha_param& alpha);

/// prefactor * (factors applied right-to-left).
laurent_poly act(const uword& w, const laurent_poly& f,
                 const std::vector<gaussian_rational>& twist);
laurent_poly act(const uword& w, const laurent_poly& f, const alpha_param& alpha);

weight weight_of(const exponent& k, const alpha_param& alpha);

std::string weight_str(const weight& w);

/// Verifies [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb exactly under the
/// twisted action, over every index quadruple and every given monomial.
struct commutator_violation {
    int a, b, c, d;
    exponent monomial;
};

struct commutator_report {
    bool ok = true;
    std::uint64_t checked = 0;
    std::vector<commutator_violation> violations;
};

commutator_report check_commutator_identity(int n, const std::vector<gaussian_rational>& twist,
                                            std::span<const exponent> monomials,
                                            run_mode mode = run_mode::parallel);

} // namespace lgl

#endif
