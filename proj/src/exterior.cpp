#include "antiexact/exterior.hpp"

#include "antiexact/errors.hpp"

namespace antiexact {

Form wedge(const Form& a, const Form& b) {
    a.require_same_space(b);
    if (a.fiber_dim() > 1 && b.fiber_dim() > 1)
        throw FiberMismatch("wedge needs at least one scalar-fibered argument");
    const int n = a.dim();
    const int out_degree = a.degree() + b.degree();
    const int fiber = std::max(a.fiber_dim(), b.fiber_dim());
    if (out_degree > n) return Form(n, fiber, std::min(out_degree, n), a.truncation());

    Form out(n, fiber, out_degree, a.truncation());
    for (const auto& [ka, sa] : a.terms()) {
        for (const auto& [kb, sb] : b.terms()) {
            int sign = wedge_sign(ka.mask, kb.mask);
            if (sign == 0) continue;
            int f = (a.fiber_dim() == 1) ? kb.fiber : ka.fiber;
            Series prod = sa * sb;
            if (sign < 0) prod = -prod;
            out.add(f, ka.mask | kb.mask, prod);
        }
    }
    return out;
}

Form conn_wedge(const Connection& A, const Form& phi) {
    if (A.dim() != phi.dim() || A.truncation() != phi.truncation())
        throw DimensionMismatch("connection/form space mismatch");
    if (A.fiber_dim() != phi.fiber_dim())
        throw DimensionMismatch("connection/form fiber mismatch");
    const int m = A.fiber_dim();
    const int out_degree = phi.degree() + 1;
    if (out_degree > phi.dim()) return Form(phi.dim(), m, phi.dim(), phi.truncation());

    Form out(phi.dim(), m, out_degree, phi.truncation());
    for (int row = 1; row <= m; ++row)
        for (int col = 1; col <= m; ++col) {
            const Form& entry = A.entry(row, col);
            if (entry.is_zero()) continue;
            Form piece = wedge(entry, phi.component(col));
            for (const auto& [key, s] : piece.terms()) out.add(row, key.mask, s);
        }
    return out;
}

MatrixForm matrix_wedge(const Connection& A, const Connection& B) {
    if (A.dim() != B.dim() || A.truncation() != B.truncation())
        throw DimensionMismatch("connection space mismatch");
    if (A.fiber_dim() != B.fiber_dim()) throw FiberMismatch("connection fiber mismatch");
    const int m = A.fiber_dim();
    MatrixForm out(A.dim(), m, std::min(2, A.dim()), A.truncation());
    if (A.dim() < 2) return out;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            Form acc(A.dim(), 1, 2, A.truncation());
            for (int k = 1; k <= m; ++k) acc += wedge(A.entry(i, k), B.entry(k, j));
            out.set_entry(i, j, acc);
        }
    return out;
}

Form matrix_form_wedge(const MatrixForm& F, const Form& phi) {
    if (F.dim != phi.dim() || F.truncation != phi.truncation())
        throw DimensionMismatch("matrix form/form space mismatch");
    if (F.fiber_dim != phi.fiber_dim()) throw DimensionMismatch("matrix form/form fiber mismatch");
    const int m = F.fiber_dim;
    const int out_degree = phi.degree() + F.degree;
    if (out_degree > phi.dim())
        return Form(phi.dim(), m, std::min(out_degree, phi.dim()), phi.truncation());
    Form out(phi.dim(), m, out_degree, phi.truncation());
    for (int row = 1; row <= m; ++row)
        for (int col = 1; col <= m; ++col) {
            const Form& entry = F.entry(row, col);
            if (entry.is_zero()) continue;
            Form piece = wedge(entry, phi.component(col));
            for (const auto& [key, s] : piece.terms()) out.add(row, key.mask, s);
        }
    return out;
}

Form interior(const PolyVectorField& X, const Form& phi) {
    if (X.dim() != phi.dim() || X.truncation() != phi.truncation())
        throw DimensionMismatch("vector field/form space mismatch");
    if (phi.degree() == 0) return Form(phi.dim(), phi.fiber_dim(), 0, phi.truncation());

    Form out(phi.dim(), phi.fiber_dim(), phi.degree() - 1, phi.truncation());
    for (const auto& [key, s] : phi.terms()) {
        for (int i : mask_indices(key.mask)) {
            const Series& xi = X.component(i - 1);
            if (xi.is_zero()) continue;
            int sign = interior_sign(key.mask, i);
            Series piece = s * xi;
            if (sign < 0) piece = -piece;
            out.add(key.fiber, key.mask & ~(IndexMask(1) << (i - 1)), piece);
        }
    }
    return out;
}

PolyVectorField sharp(const Form& alpha) {
    if (alpha.degree() != 1) throw DegreeError("sharp expects a one-form");
    if (alpha.fiber_dim() != 1) throw FiberMismatch("sharp expects a scalar-fibered form");
    PolyVectorField X(alpha.dim(), alpha.truncation());
    for (const auto& [key, s] : alpha.terms()) {
        int i = mask_indices(key.mask)[0];
        X.set_component(i - 1, s);
    }
    return X;
}

Form flat(const PolyVectorField& X, int fiber_dim) {
    Form alpha(X.dim(), fiber_dim, 1, X.truncation());
    for (int i = 0; i < X.dim(); ++i)
        alpha.add(1, IndexMask(1) << i, X.component(i));
    return alpha;
}

Form hodge_star(const Form& phi) {
    const int n = phi.dim();
    Form out(n, phi.fiber_dim(), n - phi.degree(), phi.truncation());
    for (const auto& [key, s] : phi.terms()) {
        int sign = hodge_sign(key.mask, n);
        Series piece = (sign < 0) ? -s : s;
        out.add(key.fiber, mask_all(n) & ~key.mask, piece);
    }
    return out;
}

Form star_inverse(const Form& phi) {
    const int n = phi.dim();
    const int j = phi.degree();
    Form out = hodge_star(phi);
    // star(star(omega)) = (-1)^{k(n-k)} omega on k-forms, k = n - j here.
    int k = n - j;
    if ((k * (n - k)) % 2 != 0) out = -out;
    return out;
}

Form eta(const Form& phi) {
    return (phi.degree() % 2 == 0) ? phi : -phi;
}

Form sharp_interior(const Connection& A, const Form& phi) {
    if (A.dim() != phi.dim() || A.truncation() != phi.truncation())
        throw DimensionMismatch("connection/form space mismatch");
    if (A.fiber_dim() != phi.fiber_dim())
        throw DimensionMismatch("connection/form fiber mismatch");
    const int m = A.fiber_dim();
    if (phi.degree() == 0) return Form(phi.dim(), m, 0, phi.truncation());

    Form out(phi.dim(), m, phi.degree() - 1, phi.truncation());
    for (int row = 1; row <= m; ++row)
        for (int col = 1; col <= m; ++col) {
            const Form& entry = A.entry(row, col);
            if (entry.is_zero()) continue;
            Form piece = interior(sharp(entry), phi.component(col));
            for (const auto& [key, s] : piece.terms()) out.add(row, key.mask, s);
        }
    return out;
}

}  // namespace antiexact
