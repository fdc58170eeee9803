#include "antiexact/homotopy.hpp"

#include "antiexact/errors.hpp"
#include "antiexact/exterior.hpp"

namespace antiexact {

bool Center::is_origin() const {
    for (const auto& c : x0)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<double> Center::to_doubles() const {
    std::vector<double> out;
    out.reserve(x0.size());
    for (const auto& c : x0) out.push_back(c.to_double());
    return out;
}

Form ext_d(const Form& phi) {
    const int n = phi.dim();
    const int out_degree = phi.degree() + 1;
    if (out_degree > n) return Form(n, phi.fiber_dim(), n, phi.truncation());

    Form out(n, phi.fiber_dim(), out_degree, phi.truncation());
    for (const auto& [key, s] : phi.terms()) {
        for (int i = 1; i <= n; ++i) {
            if (mask_contains(key.mask, i)) continue;
            Series ds = s.derivative(i - 1);
            if (ds.is_zero()) continue;
            int sign = wedge_sign(IndexMask(1) << (i - 1), key.mask);
            if (sign < 0) ds = -ds;
            out.add(key.fiber, key.mask | (IndexMask(1) << (i - 1)), ds);
        }
    }
    return out;
}

namespace {

/// Monomial rule at the origin, output truncated at out_trunc.
Form homotopy_at_origin(const Form& phi, int out_trunc) {
    const int n = phi.dim();
    const int k = phi.degree();
    Form out(n, phi.fiber_dim(), k - 1, out_trunc);
    for (const auto& [key, s] : phi.terms()) {
        auto idx = mask_indices(key.mask);
        for (const auto& [m, c] : s.terms()) {
            Rational weight = c / Rational(m.total_degree() + k);
            for (int i : idx) {
                int sign = interior_sign(key.mask, i);
                out.add_monomial(key.fiber, key.mask & ~(IndexMask(1) << (i - 1)),
                                 m.raised(i - 1), (sign < 0) ? -weight : weight);
            }
        }
    }
    return out;
}

}  // namespace

namespace detail {

Form homotopy_H_to(const Form& phi, const Center& center, int out_trunc) {
    if (center.dim() != phi.dim()) throw DimensionMismatch("center dimension mismatch");
    if (out_trunc < phi.truncation()) throw Error("homotopy output truncation too small");
    if (phi.degree() == 0) return Form(phi.dim(), phi.fiber_dim(), 0, out_trunc);

    if (center.is_origin()) return homotopy_at_origin(phi.lifted(out_trunc), out_trunc);

    std::vector<Rational> back;
    back.reserve(center.x0.size());
    for (const auto& c : center.x0) back.push_back(-c);
    Form centered = translated(phi.lifted(out_trunc), center.x0);
    Form result = homotopy_at_origin(centered, out_trunc);
    return translated(result, back);
}

}  // namespace detail

Form homotopy_H(const Form& phi, const Center& center) {
    return detail::homotopy_H_to(phi, center, phi.truncation()).truncated(phi.truncation());
}

Form point_part(const Form& phi, const Center& center) {
    if (center.dim() != phi.dim()) throw DimensionMismatch("center dimension mismatch");
    Form out(phi.dim(), phi.fiber_dim(), phi.degree(), phi.truncation());
    if (phi.degree() != 0) return out;
    for (const auto& [key, s] : phi.terms())
        out.add(key.fiber, key.mask, Series::constant(phi.dim(), phi.truncation(), s.eval_exact(center.x0)));
    return out;
}

Form cohomotopy_h(const Form& phi, const Center& center) {
    return eta(star_inverse(homotopy_H(hodge_star(phi), center)));
}

Form codiff(const Form& phi) {
    return star_inverse(ext_d(hodge_star(eta(phi))));
}

Form dual_point_part(const Form& phi, const Center& center) {
    return star_inverse(point_part(hodge_star(phi), center));
}

Decomposition decompose(const Form& phi, const Center& center) {
    const int N = phi.truncation();
    const int k = phi.degree();
    const Form zero(phi.dim(), phi.fiber_dim(), k, N);
    // dH vanishes identically on 0-forms, Hd on top-degree forms.
    // H raises coefficient degree by one; carry that extra degree through d
    // so dH is exact on degree-N terms too.
    Form exact = zero;
    if (k > 0) {
        Form h_lift = detail::homotopy_H_to(phi, center, N + 1);
        exact = ext_d(h_lift).truncated(N);
    }
    Form antiexact = (k < phi.dim()) ? homotopy_H(ext_d(phi), center) : zero;
    Form point = point_part(phi, center);
    return Decomposition{exact, antiexact, point};
}

Decomposition codecompose(const Form& phi, const Center& center) {
    const int N = phi.truncation();
    const int k = phi.degree();
    const Form zero(phi.dim(), phi.fiber_dim(), k, N);
    // delta h vanishes on top-degree forms, h delta on 0-forms.
    // Same one-degree lift as in decompose, conjugated by the Hodge star.
    Form coexact = zero;
    if (k < phi.dim()) {
        Form star_phi = hodge_star(phi);
        Form h_lift = eta(star_inverse(detail::homotopy_H_to(star_phi, center, N + 1)));
        coexact = codiff(h_lift).truncated(N);
    }
    Form anticoexact = (k > 0) ? cohomotopy_h(codiff(phi), center) : zero;
    Form point = dual_point_part(phi, center);
    return Decomposition{coexact, anticoexact, point};
}

bool is_exact(const Form& phi) { return ext_d(phi).is_zero(); }

bool is_coexact(const Form& phi) { return codiff(phi).is_zero(); }

}  // namespace antiexact
