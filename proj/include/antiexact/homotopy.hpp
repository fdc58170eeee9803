#pragma once

#include <vector>

#include "antiexact/form.hpp"
#include "antiexact/rational.hpp"

namespace antiexact {

/// Center of the linear homotopy F(x,t) = x0 + t(x - x0).
struct Center {
    explicit Center(std::vector<Rational> x0_) : x0(std::move(x0_)) {}
    static Center origin(int dim) { return Center(std::vector<Rational>(static_cast<size_t>(dim), Rational(0))); }

    std::vector<Rational> x0;
    int dim() const { return static_cast<int>(x0.size()); }
    bool is_origin() const;

    std::vector<double> to_doubles() const;
};

/// Exterior derivative; d(d(phi)) == 0.
Form ext_d(const Form& phi);

/// Homotopy operator of the linear homotopy with the given center: lowers
/// form degree by one, raises coefficient degree by one, zero on 0-forms.
/// For a monomial x^a dx_I (center at the origin),
///   H(x^a dx_I) = x^a (K _| dx_I) / (|a| + |I|),   K = x^i d_i.
/// Arbitrary centers are handled by translating the coordinates, applying
/// the monomial rule, and translating back.
Form homotopy_H(const Form& phi, const Center& center);

/// Pullback along the constant map to the center: phi(x0) on 0-forms,
/// zero on higher degrees.
Form point_part(const Form& phi, const Center& center);

/// Cohomotopy operator h = eta o star_inverse o H o star.
Form cohomotopy_h(const Form& phi, const Center& center);

/// Codifferential delta = star_inverse o d o star o eta; delta(delta(phi)) == 0.
Form codiff(const Form& phi);

/// Dual point part S = star_inverse o s* o star; nonzero only on n-forms.
Form dual_point_part(const Form& phi, const Center& center);

/// Direct-sum split of a form. For the primal split: exact = dH(phi),
/// antiexact = Hd(phi), point = s*(phi); the three parts sum to the input
/// exactly. The same holds for the dual (coexact/anticoexact) split.
struct Decomposition {
    Form exact_part;
    Form antiexact_part;
    Form point_part;

    Form sum() const { return exact_part + antiexact_part + point_part; }
};

/// phi = dH(phi) + Hd(phi) + s*(phi), computed with a one-degree internal
/// lift so the identity is exact for every stored term.
Decomposition decompose(const Form& phi, const Center& center);

/// phi = delta h(phi) + h delta(phi) + S(phi); exact at truncation.
Decomposition codecompose(const Form& phi, const Center& center);

/// Truncation-level exactness/coexactness tests: the derivative of every
/// stored term vanishes.
bool is_exact(const Form& phi);
bool is_coexact(const Form& phi);

namespace detail {
/// H with the output truncated at `out_trunc` (>= phi.truncation()); used to
/// keep dH-style compositions exact on top-degree coefficients.
Form homotopy_H_to(const Form& phi, const Center& center, int out_trunc);
}  // namespace detail

}  // namespace antiexact
