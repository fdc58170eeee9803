#include "antiexact/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "antiexact/errors.hpp"

namespace antiexact {

std::vector<MultiIndex> all_multi_indices(int dim, int max_total) {
    std::vector<MultiIndex> out;
    std::vector<int> exps(dim, 0);
    // Depth-first enumeration; the result is sorted afterwards into graded-lex.
    struct Rec {
        int dim, max_total;
        std::vector<int>* exps;
        std::vector<MultiIndex>* out;
        void run(int pos, int remaining) {
            if (pos == dim) {
                out->emplace_back(*exps);
                return;
            }
            for (int e = 0; e <= remaining; ++e) {
                (*exps)[pos] = e;
                run(pos + 1, remaining - e);
            }
            (*exps)[pos] = 0;
        }
    };
    Rec{dim, max_total, &exps, &out}.run(0, max_total);
    std::sort(out.begin(), out.end());
    return out;
}

Series::Series(int dim, int truncation) : dim_(dim), trunc_(truncation) {
    if (dim < 0 || truncation < 0) throw Error("bad series shape");
}

Series Series::constant(int dim, int truncation, const Rational& c) {
    Series s(dim, truncation);
    s.add_term(MultiIndex(dim), c);
    return s;
}

Series Series::variable(int dim, int truncation, int i) {
    if (i < 0 || i >= dim) throw DimensionMismatch("variable index out of range");
    Series s(dim, truncation);
    s.add_term(MultiIndex(dim).raised(i), Rational(1));
    return s;
}

Series Series::monomial(int dim, int truncation, const MultiIndex& m, const Rational& c) {
    if (m.dim() != dim) throw DimensionMismatch("monomial dimension mismatch");
    Series s(dim, truncation);
    s.add_term(m, c);
    return s;
}

Rational Series::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::constant_term() const { return coeff(MultiIndex(dim_)); }

std::optional<int> Series::min_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.total_degree();  // graded-lex order
}

int Series::max_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

void Series::add_term(const MultiIndex& m, const Rational& c) {
    if (m.dim() != dim_) throw DimensionMismatch("term dimension mismatch");
    if (c.is_zero() || m.total_degree() > trunc_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Series::require_compatible(const Series& o) const {
    if (dim_ != o.dim_ || trunc_ != o.trunc_)
        throw DimensionMismatch("series dimension/truncation mismatch");
}

Series Series::operator-() const {
    Series r(dim_, trunc_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Series& Series::operator+=(const Series& o) {
    require_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    require_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Series Series::operator*(const Series& o) const {
    require_compatible(o);
    Series r(dim_, trunc_);
    for (const auto& [ma, ca] : terms_) {
        if (ma.total_degree() > trunc_) continue;
        for (const auto& [mb, cb] : o.terms_) {
            if (ma.total_degree() + mb.total_degree() > trunc_) break;  // graded order
            r.add_term(ma.plus(mb), ca * cb);
        }
    }
    return r;
}

Series Series::scaled(const Rational& c) const {
    Series r(dim_, trunc_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Series Series::derivative(int i) const {
    if (i < 0 || i >= dim_) throw DimensionMismatch("derivative index out of range");
    Series r(dim_, trunc_);
    for (const auto& [m, c] : terms_) {
        int e = m[i];
        if (e == 0) continue;
        r.add_term(m.raised(i, -1), c * Rational(e));
    }
    return r;
}

Series Series::times_variable(int i) const {
    if (i < 0 || i >= dim_) throw DimensionMismatch("variable index out of range");
    Series r(dim_, trunc_);
    for (const auto& [m, c] : terms_) {
        if (m.total_degree() + 1 > trunc_) continue;
        r.add_term(m.raised(i), c);
    }
    return r;
}

Series Series::exp() const {
    if (!constant_term().is_zero())
        throw NonNilpotentArgument("series exp requires zero constant term");
    Series sum = Series::constant(dim_, trunc_, Rational(1));
    Series power = sum;
    for (int j = 1; j <= trunc_; ++j) {
        power = power * *this;
        if (power.is_zero()) break;
        sum += power.scaled(Rational::factorial(static_cast<unsigned>(j)).inverse());
    }
    return sum;
}

Series Series::translated(const std::vector<Rational>& shift) const {
    if (static_cast<int>(shift.size()) != dim_)
        throw DimensionMismatch("shift dimension mismatch");
    bool trivial = true;
    for (const auto& s : shift)
        if (!s.is_zero()) trivial = false;
    if (trivial) return *this;

    // Per-variable binomial expansion of (x_i + s_i)^e, multiplied together.
    Series out(dim_, trunc_);
    for (const auto& [m, c] : terms_) {
        Series term = Series::constant(dim_, trunc_, c);
        for (int i = 0; i < dim_; ++i) {
            int e = m[i];
            if (e == 0) continue;
            Series base = Series::variable(dim_, trunc_, i);
            base.add_term(MultiIndex(dim_), shift[i]);
            for (int p = 0; p < e; ++p) term = term * base;
        }
        out += term;
    }
    return out;
}

Series Series::truncated(int new_trunc) const {
    Series r(dim_, new_trunc);
    for (const auto& [m, c] : terms_) {
        if (m.total_degree() > new_trunc) continue;
        r.terms_.emplace(m, c);
    }
    return r;
}

Series Series::lifted(int new_trunc) const {
    if (new_trunc < trunc_) throw Error("lift must not lower the truncation bound");
    Series r(dim_, new_trunc);
    r.terms_ = terms_;
    return r;
}

double Series::eval(const std::vector<double>& point) const {
    if (static_cast<int>(point.size()) != dim_)
        throw DimensionMismatch("evaluation point dimension mismatch");
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double v = c.to_double();
        for (int i = 0; i < dim_; ++i)
            for (int p = 0; p < m[i]; ++p) v *= point[i];
        acc += v;
    }
    return acc;
}

Rational Series::eval_exact(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != dim_)
        throw DimensionMismatch("evaluation point dimension mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < dim_; ++i)
            for (int p = 0; p < m[i]; ++p) v *= point[i];
        acc += v;
    }
    return acc;
}

std::string Series::str(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool printed_coeff = false;
        if (!a.is_one() || m.total_degree() == 0) {
            os << a.str();
            printed_coeff = true;
        }
        for (int i = 0; i < dim_; ++i) {
            if (m[i] == 0) continue;
            if (printed_coeff) os << "*";
            os << vars[i];
            if (m[i] > 1) os << "^" << m[i];
            printed_coeff = true;
        }
    }
    return os.str();
}

}  // namespace antiexact
