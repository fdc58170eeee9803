#pragma once

#include <vector>

#include "antiexact/form.hpp"

namespace antiexact {

/// m x m matrix of scalar one-forms: the connection A of d + A^_, and the
/// transformed A' after a gauge move.
class Connection {
public:
    Connection(int dim, int fiber_dim, int truncation);

    static Connection zero(int dim, int fiber_dim, int truncation) {
        return Connection(dim, fiber_dim, truncation);
    }
    /// m = 1 connection from a single scalar one-form.
    static Connection scalar(const Form& a);

    int dim() const { return dim_; }
    int fiber_dim() const { return fiber_dim_; }
    int truncation() const { return trunc_; }

    const Form& entry(int row, int col) const;  // 1-based
    void set_entry(int row, int col, const Form& a);
    bool is_zero() const;

    Connection operator-() const;
    Connection& operator+=(const Connection& o);
    friend Connection operator+(Connection a, const Connection& b) { return a += b; }

    friend bool operator==(const Connection&, const Connection&) = default;

private:
    int dim_;
    int fiber_dim_;
    int trunc_;
    std::vector<Form> entries_;  // row-major
};

/// Substitute x_i -> x_i + shift_i in every entry.
Connection translated(const Connection& A, const std::vector<Rational>& shift);

/// m x m matrix of scalar k-forms (houses the curvature F = dA + A^A).
struct MatrixForm {
    MatrixForm(int dim, int fiber_dim, int degree, int truncation);

    int dim;
    int fiber_dim;
    int degree;
    int truncation;
    std::vector<Form> entries;  // row-major, scalar-fibered

    const Form& entry(int row, int col) const;
    void set_entry(int row, int col, const Form& a);
    bool is_zero() const;

    friend bool operator==(const MatrixForm&, const MatrixForm&) = default;
};

/// Invertible m x m matrix of functions; the inverse is carried alongside
/// and checked against the entries at construction.
class GaugeElement {
public:
    /// Builds the inverse by series inversion; the constant part must be an
    /// invertible rational matrix.
    static GaugeElement from_entries(int dim, int fiber_dim, int truncation,
                                     std::vector<Series> entries);
    static GaugeElement identity(int dim, int fiber_dim, int truncation);
    /// m = 1 gauge g = exp(lambda); lambda must have zero constant term.
    static GaugeElement scalar_exp(const Series& lambda);

    int dim() const { return dim_; }
    int fiber_dim() const { return fiber_dim_; }
    int truncation() const { return trunc_; }

    const Series& entry(int row, int col) const;
    const Series& inverse_entry(int row, int col) const;

    /// entries * inverse == inverse * entries == identity at truncation.
    bool is_consistent() const;

private:
    GaugeElement(int dim, int fiber_dim, int truncation, std::vector<Series> entries,
                 std::vector<Series> inverse);

    int dim_;
    int fiber_dim_;
    int trunc_;
    std::vector<Series> entries_;
    std::vector<Series> inverse_;
};

}  // namespace antiexact
