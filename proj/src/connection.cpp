#include "antiexact/connection.hpp"

#include "antiexact/errors.hpp"

namespace antiexact {

Connection::Connection(int dim, int fiber_dim, int truncation)
    : dim_(dim), fiber_dim_(fiber_dim), trunc_(truncation) {
    if (fiber_dim < 1) throw FiberMismatch("connection fiber dimension must be positive");
    entries_.assign(static_cast<size_t>(fiber_dim) * fiber_dim, Form(dim, 1, 1, truncation));
}

Connection Connection::scalar(const Form& a) {
    if (a.fiber_dim() != 1) throw FiberMismatch("scalar connection entry must have m=1");
    if (a.degree() != 1) throw DegreeError("connection entries must be one-forms");
    Connection A(a.dim(), 1, a.truncation());
    A.set_entry(1, 1, a);
    return A;
}

const Form& Connection::entry(int row, int col) const {
    if (row < 1 || row > fiber_dim_ || col < 1 || col > fiber_dim_)
        throw FiberMismatch("connection entry out of range");
    return entries_[static_cast<size_t>(row - 1) * fiber_dim_ + (col - 1)];
}

void Connection::set_entry(int row, int col, const Form& a) {
    if (row < 1 || row > fiber_dim_ || col < 1 || col > fiber_dim_)
        throw FiberMismatch("connection entry out of range");
    if (a.dim() != dim_ || a.truncation() != trunc_)
        throw DimensionMismatch("connection entry shape mismatch");
    if (a.fiber_dim() != 1) throw FiberMismatch("connection entries are scalar-fibered");
    if (a.degree() != 1) throw DegreeError("connection entries must be one-forms");
    entries_[static_cast<size_t>(row - 1) * fiber_dim_ + (col - 1)] = a;
}

bool Connection::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

Connection Connection::operator-() const {
    Connection out(dim_, fiber_dim_, trunc_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
    return out;
}

Connection& Connection::operator+=(const Connection& o) {
    if (dim_ != o.dim_ || trunc_ != o.trunc_) throw DimensionMismatch("connection space mismatch");
    if (fiber_dim_ != o.fiber_dim_) throw FiberMismatch("connection fiber mismatch");
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

Connection translated(const Connection& A, const std::vector<Rational>& shift) {
    Connection out(A.dim(), A.fiber_dim(), A.truncation());
    for (int i = 1; i <= A.fiber_dim(); ++i)
        for (int j = 1; j <= A.fiber_dim(); ++j)
            out.set_entry(i, j, translated(A.entry(i, j), shift));
    return out;
}

MatrixForm::MatrixForm(int dim_, int fiber_dim_, int degree_, int truncation_)
    : dim(dim_), fiber_dim(fiber_dim_), degree(degree_), truncation(truncation_) {
    if (fiber_dim < 1) throw FiberMismatch("matrix form fiber dimension must be positive");
    entries.assign(static_cast<size_t>(fiber_dim) * fiber_dim, Form(dim, 1, degree, truncation));
}

const Form& MatrixForm::entry(int row, int col) const {
    return entries[static_cast<size_t>(row - 1) * fiber_dim + (col - 1)];
}

void MatrixForm::set_entry(int row, int col, const Form& a) {
    if (a.degree() != degree) throw DegreeError("matrix form entry degree mismatch");
    entries[static_cast<size_t>(row - 1) * fiber_dim + (col - 1)] = a;
}

bool MatrixForm::is_zero() const {
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

namespace {

std::vector<Series> matrix_product(int m, const std::vector<Series>& a,
                                   const std::vector<Series>& b) {
    std::vector<Series> out;
    out.reserve(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Series acc = Series::zero(a[0].dim(), a[0].truncation());
            for (int k = 0; k < m; ++k)
                acc += a[static_cast<size_t>(i) * m + k] * b[static_cast<size_t>(k) * m + j];
            out.push_back(acc);
        }
    return out;
}

bool is_identity(int m, const std::vector<Series>& a) {
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Series& s = a[static_cast<size_t>(i) * m + j];
            Series expect = (i == j) ? Series::constant(s.dim(), s.truncation(), Rational(1))
                                     : Series::zero(s.dim(), s.truncation());
            if (s != expect) return false;
        }
    return true;
}

}  // namespace

GaugeElement::GaugeElement(int dim, int fiber_dim, int truncation, std::vector<Series> entries,
                           std::vector<Series> inverse)
    : dim_(dim),
      fiber_dim_(fiber_dim),
      trunc_(truncation),
      entries_(std::move(entries)),
      inverse_(std::move(inverse)) {}

GaugeElement GaugeElement::from_entries(int dim, int fiber_dim, int truncation,
                                        std::vector<Series> entries) {
    const int m = fiber_dim;
    if (static_cast<int>(entries.size()) != m * m)
        throw FiberMismatch("gauge entry count mismatch");

    // Split g = C + R with C the constant part; invert C exactly, then
    // (C + R)^{-1} = (I + C^{-1}R)^{-1} C^{-1} by a truncated Neumann series.
    std::vector<Rational> c(static_cast<size_t>(m) * m);
    for (int i = 0; i < m * m; ++i) c[static_cast<size_t>(i)] = entries[static_cast<size_t>(i)].constant_term();

    // Gauss-Jordan inverse of the constant matrix.
    std::vector<Rational> aug(static_cast<size_t>(m) * 2 * m, Rational(0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) aug[static_cast<size_t>(i) * 2 * m + j] = c[static_cast<size_t>(i) * m + j];
        aug[static_cast<size_t>(i) * 2 * m + m + i] = Rational(1);
    }
    for (int col = 0; col < m; ++col) {
        int pivot = -1;
        for (int r = col; r < m; ++r)
            if (!aug[static_cast<size_t>(r) * 2 * m + col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw SingularGauge("gauge constant part is singular");
        if (pivot != col)
            for (int j = 0; j < 2 * m; ++j)
                std::swap(aug[static_cast<size_t>(pivot) * 2 * m + j], aug[static_cast<size_t>(col) * 2 * m + j]);
        Rational inv = aug[static_cast<size_t>(col) * 2 * m + col].inverse();
        for (int j = 0; j < 2 * m; ++j) aug[static_cast<size_t>(col) * 2 * m + j] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == col) continue;
            Rational f = aug[static_cast<size_t>(r) * 2 * m + col];
            if (f.is_zero()) continue;
            for (int j = 0; j < 2 * m; ++j)
                aug[static_cast<size_t>(r) * 2 * m + j] -= f * aug[static_cast<size_t>(col) * 2 * m + j];
        }
    }

    std::vector<Series> cinv;
    cinv.reserve(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            cinv.push_back(Series::constant(dim, truncation, aug[static_cast<size_t>(i) * 2 * m + m + j]));

    // N = C^{-1} R has no constant part, so the Neumann series terminates.
    std::vector<Series> r = entries;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Series& s = r[static_cast<size_t>(i) * m + j];
            Series cpart = Series::constant(dim, truncation, s.constant_term());
            s -= cpart;
        }
    std::vector<Series> n = matrix_product(m, cinv, r);

    std::vector<Series> acc(static_cast<size_t>(m) * m, Series::zero(dim, truncation));
    for (int i = 0; i < m; ++i) acc[static_cast<size_t>(i) * m + i] = Series::constant(dim, truncation, Rational(1));
    std::vector<Series> power = acc;
    for (int p = 1; p <= truncation; ++p) {
        power = matrix_product(m, power, n);
        bool zero = true;
        for (const auto& s : power)
            if (!s.is_zero()) zero = false;
        if (zero) break;
        for (int i = 0; i < m * m; ++i) {
            if (p % 2 == 1)
                acc[static_cast<size_t>(i)] -= power[static_cast<size_t>(i)];
            else
                acc[static_cast<size_t>(i)] += power[static_cast<size_t>(i)];
        }
    }
    std::vector<Series> inverse = matrix_product(m, acc, cinv);

    GaugeElement g(dim, fiber_dim, truncation, std::move(entries), std::move(inverse));
    if (!g.is_consistent()) throw SingularGauge("gauge inverse check failed");
    return g;
}

GaugeElement GaugeElement::identity(int dim, int fiber_dim, int truncation) {
    std::vector<Series> e(static_cast<size_t>(fiber_dim) * fiber_dim, Series::zero(dim, truncation));
    for (int i = 0; i < fiber_dim; ++i)
        e[static_cast<size_t>(i) * fiber_dim + i] = Series::constant(dim, truncation, Rational(1));
    return GaugeElement(dim, fiber_dim, truncation, e, e);
}

GaugeElement GaugeElement::scalar_exp(const Series& lambda) {
    Series g = lambda.exp();
    Series ginv = (-lambda).exp();
    return GaugeElement(lambda.dim(), 1, lambda.truncation(), {g}, {ginv});
}

const Series& GaugeElement::entry(int row, int col) const {
    return entries_[static_cast<size_t>(row - 1) * fiber_dim_ + (col - 1)];
}

const Series& GaugeElement::inverse_entry(int row, int col) const {
    return inverse_[static_cast<size_t>(row - 1) * fiber_dim_ + (col - 1)];
}

bool GaugeElement::is_consistent() const {
    return is_identity(fiber_dim_, matrix_product(fiber_dim_, entries_, inverse_)) &&
           is_identity(fiber_dim_, matrix_product(fiber_dim_, inverse_, entries_));
}

}  // namespace antiexact
