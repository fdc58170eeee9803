#include "antiexact/form.hpp"

#include <sstream>

#include "antiexact/errors.hpp"

namespace antiexact {

Form::Form(int dim, int fiber_dim, int degree, int truncation)
    : dim_(dim), fiber_dim_(fiber_dim), degree_(degree), trunc_(truncation) {
    if (dim < 0 || fiber_dim < 1 || truncation < 0) throw Error("bad form shape");
    if (degree < 0 || degree > dim) throw DegreeError("form degree out of range");
}

Series Form::coeff(int fiber, IndexMask mask) const {
    auto it = coeffs_.find(FormKey{fiber, mask});
    return it == coeffs_.end() ? Series::zero(dim_, trunc_) : it->second;
}

void Form::add(int fiber, IndexMask mask, const Series& s) {
    if (fiber < 1 || fiber > fiber_dim_) throw FiberMismatch("fiber index out of range");
    if (mask_degree(mask) != degree_) throw DegreeError("index set degree mismatch");
    if (mask & ~mask_all(dim_)) throw DimensionMismatch("index set beyond ambient dimension");
    if (s.dim() != dim_ || s.truncation() != trunc_)
        throw DimensionMismatch("coefficient series shape mismatch");
    if (s.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(FormKey{fiber, mask}, s);
    if (!inserted) {
        it->second += s;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void Form::add_monomial(int fiber, IndexMask mask, const MultiIndex& m, const Rational& c) {
    add(fiber, mask, Series::monomial(dim_, trunc_, m, c));
}

Form Form::component(int fiber) const {
    Form out(dim_, 1, degree_, trunc_);
    for (const auto& [key, s] : coeffs_)
        if (key.fiber == fiber) out.add(1, key.mask, s);
    return out;
}

std::optional<int> Form::min_coeff_degree() const {
    std::optional<int> best;
    for (const auto& [key, s] : coeffs_) {
        auto d = s.min_degree();
        if (d && (!best || *d < *best)) best = d;
    }
    return best;
}

int Form::max_coeff_degree() const {
    int best = 0;
    for (const auto& [key, s] : coeffs_) best = std::max(best, s.max_degree());
    return best;
}

Form Form::operator-() const {
    Form out(dim_, fiber_dim_, degree_, trunc_);
    for (const auto& [key, s] : coeffs_) out.coeffs_.emplace(key, -s);
    return out;
}

Form& Form::operator+=(const Form& o) {
    require_same_shape(o);
    for (const auto& [key, s] : o.coeffs_) add(key.fiber, key.mask, s);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    require_same_shape(o);
    for (const auto& [key, s] : o.coeffs_) add(key.fiber, key.mask, -s);
    return *this;
}

Form Form::scaled(const Rational& c) const {
    Form out(dim_, fiber_dim_, degree_, trunc_);
    if (c.is_zero()) return out;
    for (const auto& [key, s] : coeffs_) out.coeffs_.emplace(key, s.scaled(c));
    return out;
}

Form Form::scaled_by(const Series& f) const {
    if (f.dim() != dim_ || f.truncation() != trunc_)
        throw DimensionMismatch("scalar factor shape mismatch");
    Form out(dim_, fiber_dim_, degree_, trunc_);
    for (const auto& [key, s] : coeffs_) out.add(key.fiber, key.mask, s * f);
    return out;
}

Form Form::truncated(int new_trunc) const {
    Form out(dim_, fiber_dim_, degree_, new_trunc);
    for (const auto& [key, s] : coeffs_) out.add(key.fiber, key.mask, s.truncated(new_trunc));
    return out;
}

Form Form::lifted(int new_trunc) const {
    Form out(dim_, fiber_dim_, degree_, new_trunc);
    for (const auto& [key, s] : coeffs_) out.coeffs_.emplace(key, s.lifted(new_trunc));
    return out;
}

Form Form::graded_from(int min_total) const {
    Form out(dim_, fiber_dim_, degree_, trunc_);
    for (const auto& [key, s] : coeffs_) {
        Series kept(dim_, trunc_);
        for (const auto& [m, c] : s.terms())
            if (m.total_degree() >= min_total) kept.add_term(m, c);
        out.add(key.fiber, key.mask, kept);
    }
    return out;
}

std::string Form::str(const std::vector<std::string>& vars) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, s] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << s.str(vars) << ")";
        std::string basis = mask_str(key.mask, vars);
        if (!basis.empty()) os << " " << basis;
        if (fiber_dim_ > 1) os << " [" << key.fiber << "]";
    }
    return os.str();
}

void Form::require_same_shape(const Form& o) const {
    if (dim_ != o.dim_ || trunc_ != o.trunc_) throw DimensionMismatch("form space mismatch");
    if (fiber_dim_ != o.fiber_dim_) throw FiberMismatch("form fiber mismatch");
    if (degree_ != o.degree_) throw DegreeError("form degree mismatch");
}

void Form::require_same_space(const Form& o) const {
    if (dim_ != o.dim_ || trunc_ != o.trunc_) throw DimensionMismatch("form space mismatch");
}

Form translated(const Form& phi, const std::vector<Rational>& shift) {
    Form out(phi.dim(), phi.fiber_dim(), phi.degree(), phi.truncation());
    for (const auto& [key, s] : phi.terms()) out.add(key.fiber, key.mask, s.translated(shift));
    return out;
}

PolyVectorField::PolyVectorField(int dim, int truncation) : dim_(dim), trunc_(truncation) {
    if (dim < 0 || truncation < 0) throw Error("bad vector field shape");
    comps_.assign(static_cast<size_t>(dim), Series::zero(dim, truncation));
}

PolyVectorField PolyVectorField::radial(int dim, int truncation) {
    PolyVectorField X(dim, truncation);
    for (int i = 0; i < dim; ++i) X.set_component(i, Series::variable(dim, truncation, i));
    return X;
}

void PolyVectorField::set_component(int i, const Series& s) {
    if (i < 0 || i >= dim_) throw DimensionMismatch("component index out of range");
    if (s.dim() != dim_ || s.truncation() != trunc_)
        throw DimensionMismatch("component series shape mismatch");
    comps_[static_cast<size_t>(i)] = s;
}

bool PolyVectorField::is_zero() const {
    for (const auto& s : comps_)
        if (!s.is_zero()) return false;
    return true;
}

}  // namespace antiexact
