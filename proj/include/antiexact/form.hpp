#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antiexact/index_set.hpp"
#include "antiexact/series.hpp"

namespace antiexact {

/// Key of one stored coefficient: fiber component (1-based) and basis
/// index set of the form's degree.
struct FormKey {
    int fiber;
    IndexMask mask;
    friend bool operator==(const FormKey&, const FormKey&) = default;
    friend bool operator<(const FormKey& a, const FormKey& b) {
        if (a.fiber != b.fiber) return a.fiber < b.fiber;
        return a.mask < b.mask;
    }
};

/// Degree-k differential form on R^n valued in Q^m, with truncated power
/// series coefficients. Stored fiber-component-wise over canonical
/// increasing index sets; zero coefficients are never stored.
class Form {
public:
    Form(int dim, int fiber_dim, int degree, int truncation);

    static Form zero(int dim, int fiber_dim, int degree, int truncation) {
        return Form(dim, fiber_dim, degree, truncation);
    }

    int dim() const { return dim_; }
    int fiber_dim() const { return fiber_dim_; }
    int degree() const { return degree_; }
    int truncation() const { return trunc_; }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<FormKey, Series>& terms() const { return coeffs_; }

    Series coeff(int fiber, IndexMask mask) const;
    void add(int fiber, IndexMask mask, const Series& s);
    void add_monomial(int fiber, IndexMask mask, const MultiIndex& m, const Rational& c);

    /// Scalar-fibered slice holding one fiber component.
    Form component(int fiber) const;

    /// Smallest coefficient total degree over all stored terms.
    std::optional<int> min_coeff_degree() const;
    int max_coeff_degree() const;

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    Form scaled(const Rational& c) const;
    /// Pointwise product with a scalar function.
    Form scaled_by(const Series& f) const;

    Form truncated(int new_trunc) const;
    Form lifted(int new_trunc) const;
    /// Drop coefficient terms of total degree < min_total (grading filter).
    Form graded_from(int min_total) const;

    friend bool operator==(const Form& a, const Form& b) {
        return a.dim_ == b.dim_ && a.fiber_dim_ == b.fiber_dim_ && a.degree_ == b.degree_ &&
               a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& vars) const;

    void require_same_shape(const Form& o) const;
    void require_same_space(const Form& o) const;  // dim/trunc only

private:
    int dim_;
    int fiber_dim_;
    int degree_;
    int trunc_;
    std::map<FormKey, Series> coeffs_;
};

/// Substitute x_i -> x_i + shift_i in every coefficient.
Form translated(const Form& phi, const std::vector<Rational>& shift);

/// Vector field with polynomial (truncated series) components.
class PolyVectorField {
public:
    PolyVectorField(int dim, int truncation);
    static PolyVectorField radial(int dim, int truncation);  // x^i d_i at the origin

    int dim() const { return dim_; }
    int truncation() const { return trunc_; }
    const Series& component(int i) const { return comps_[static_cast<size_t>(i)]; }
    void set_component(int i, const Series& s);
    bool is_zero() const;

    friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;

private:
    int dim_;
    int trunc_;
    std::vector<Series> comps_;
};

}  // namespace antiexact
