#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antiexact/multi_index.hpp"
#include "antiexact/rational.hpp"

namespace antiexact {

/// Truncated multivariate power series over exact rationals: the coefficient
/// ring of every differential form in the engine. Terms of total degree above
/// the truncation bound are dropped by every product; zero coefficients are
/// never stored, so equality is structural.
class Series {
public:
    Series(int dim, int truncation);

    static Series zero(int dim, int truncation) { return Series(dim, truncation); }
    static Series constant(int dim, int truncation, const Rational& c);
    static Series variable(int dim, int truncation, int i);  // x_{i}, 0-based
    static Series monomial(int dim, int truncation, const MultiIndex& m, const Rational& c);

    int dim() const { return dim_; }
    int truncation() const { return trunc_; }
    const std::map<MultiIndex, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const MultiIndex& m) const;
    Rational constant_term() const;
    /// Smallest total degree among stored terms; empty for the zero series.
    std::optional<int> min_degree() const;
    int max_degree() const;

    void add_term(const MultiIndex& m, const Rational& c);

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    Series operator*(const Series& o) const;
    Series scaled(const Rational& c) const;
    Series derivative(int i) const;  // d/dx_{i}
    /// Multiplication by x_{i}; terms pushed above the bound are dropped.
    Series times_variable(int i) const;

    /// Sum_{j<=trunc} a^j / j!; requires zero constant term.
    Series exp() const;

    /// Substitute x_{i} -> x_{i} + shift_{i}. Degree-preserving, exact.
    Series translated(const std::vector<Rational>& shift) const;

    /// Drop terms of total degree > new_trunc and adopt the new bound.
    Series truncated(int new_trunc) const;
    /// Same terms under a bound >= the current one.
    Series lifted(int new_trunc) const;

    double eval(const std::vector<double>& point) const;
    Rational eval_exact(const std::vector<Rational>& point) const;

    friend bool operator==(const Series& a, const Series& b) {
        return a.dim_ == b.dim_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& vars) const;

private:
    void require_compatible(const Series& o) const;

    int dim_;
    int trunc_;
    std::map<MultiIndex, Rational> terms_;
};

}  // namespace antiexact
