#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antiexact/connection.hpp"
#include "antiexact/exterior.hpp"
#include "antiexact/form.hpp"
#include "antiexact/homotopy.hpp"

namespace antiexact {

enum class ConstraintStatus { Satisfied, NoSolution, NotApplicable };

std::string to_string(ConstraintStatus s);

struct SolveOptions {
    bool compute_kernel = true;
    bool compute_radius = true;
    /// Probe point for the radius estimate; empty means center + (1,...,1).
    std::vector<double> radius_probe;
};

/// The ker(A^_) branch phi = c + H(J_e) of the exact-RHS equation, reported
/// alongside the main solve with its membership checks.
struct KernelBranch {
    Form candidate;
    bool c_in_kernel = false;
    bool seed_in_kernel = false;
    bool valid = false;
};

struct SolveReport {
    Form solution;
    Form residual;
    /// Smallest coefficient degree in the residual; empty when it vanishes.
    std::optional<int> residual_min_degree;
    int iterations = 0;
    std::vector<Form> gauge_mode_basis;
    std::vector<Form> kernel_basis;
    ConstraintStatus constraint_status = ConstraintStatus::NotApplicable;
    std::optional<double> radius_estimate;
    /// Series terms gamma_l in order (unsigned; the solution alternates them).
    std::vector<Form> iterates;

    // General-equation diagnostics.
    std::optional<Form> phi1, phi2, phi3;
    /// Part of the antiexact inhomogeneity outside Im(A^_); nonzero means
    /// the constraint, and hence the equation, has no solution.
    std::optional<Form> constraint_residual;
    std::optional<KernelBranch> kernel_branch;

    SolveReport(const Form& sol, const Form& res) : solution(sol), residual(res) {}
};

// -- first-degree operators ----------------------------------------------------

/// d phi + A ^ phi.
Form cov_d(const Connection& A, const Form& phi);
/// delta phi + A# _| phi.
Form dual_cov_d(const Connection& A, const Form& phi);

// -- kernels and algebraic constraints ------------------------------------------

/// Basis of { phi in degree k : A ^ phi = 0 } on the truncated coefficient space.
std::vector<Form> kernel_basis(const Connection& A, int k);
/// Basis of { phi : A# _| phi = 0 }.
std::vector<Form> dual_kernel_basis(const Connection& A, int k);
/// Kernel intersected with closed forms: the gauge modes.
std::vector<Form> exact_gauge_modes(const Connection& A, int k);
/// Dual kernel intersected with coclosed forms.
std::vector<Form> coexact_gauge_modes(const Connection& A, int k);

/// Outcome of the algebraic constraint A ^ phi2 = J_a (or its dual). The
/// particular solution solves the reachable part of the system with kernel
/// directions zeroed; `unreachable` is what remains of the right-hand side,
/// and satisfied == unreachable.is_zero().
struct ConstraintSolution {
    Form particular;
    Form unreachable;
    bool satisfied = true;
};

ConstraintSolution solve_wedge_constraint(const Connection& A, const Form& J_a);
ConstraintSolution solve_interior_constraint(const Connection& A, const Form& J_y);

// -- covariant constancy solvers -------------------------------------------------

/// d phi + A ^ phi = 0 with dH(phi) = c, by the alternating homotopy series.
SolveReport solve_homogeneous(const Connection& A, const Form& c, const Center& center,
                              const SolveOptions& opts = {});

/// Degree-0, m=1 closed form c0 * exp(-H(A)).
Form solve_scalar_homogeneous(const Connection& A, const Rational& c0, const Center& center);

/// d phi + A ^ phi = J_e with exact J_e and dH(phi) = c.
SolveReport solve_inhom_exact(const Connection& A, const Form& c, const Form& J_e,
                              const Center& center, const SolveOptions& opts = {});

/// d phi + A ^ phi = J for arbitrary J: antiexact part routed through the
/// algebraic constraint, exact part through the series.
SolveReport solve_general(const Connection& A, const Form& c, const Form& J,
                          const Center& center, const SolveOptions& opts = {});

/// F = dA + A ^ A.
MatrixForm curvature(const Connection& A);

/// Second-order (curvature) equation solved as a coupled first-order system:
/// stage 2 solves d-nabla phi2 = J with dH(phi2) = c2, stage 1 solves
/// d-nabla phi1 = phi2 with dH(phi1) = 0; a first-order solution with seed c1
/// is added when c1 is nonzero.
struct CurvatureSolution {
    Form phi1;
    Form phi2;
    SolveReport stage2;
    SolveReport stage1;
    ConstraintStatus status = ConstraintStatus::Satisfied;
    int failing_stage = 0;  // 0 none, otherwise 1 or 2
};

CurvatureSolution solve_curvature(const Connection& A, const Form& J, const Form& c1,
                                  const Form& c2, const Center& center,
                                  const SolveOptions& opts = {});

/// delta phi + A# _| phi = J: the Hodge-dual mirror of solve_general under
/// d -> delta, H -> h, A^_ -> A#_|_.
SolveReport solve_dual(const Connection& A, const Form& c, const Form& J, const Center& center,
                       const SolveOptions& opts = {});

// -- geometric-operator pipelines -------------------------------------------------

struct PipelineStage {
    enum class Kind { CovariantD, DualCovariantD };

    static PipelineStage covariant(Connection A, int exponent = 1);
    static PipelineStage dual(PolyVectorField X, int exponent = 1);

    Kind kind = Kind::CovariantD;
    std::optional<Connection> conn;        // CovariantD
    std::optional<PolyVectorField> field;  // DualCovariantD
    int exponent = 1;
    /// Initial data per first-order step; missing entries mean zero.
    std::vector<Form> initial_data;
};

struct PipelineSolution {
    Form solution;
    std::vector<SolveReport> step_reports;  // outermost operator first
    ConstraintStatus status = ConstraintStatus::Satisfied;
    int failing_step = 0;  // 1-based, 0 = none
};

/// Solves D1 D2 ... Dr phi = J by peeling one first-degree operator at a
/// time, outermost first; stages are listed in the order the composite
/// operator is written.
PipelineSolution solve_pipeline(const std::vector<PipelineStage>& stages, const Form& J,
                                const Center& center, const SolveOptions& opts = {});

// -- gauge moves and horizontal projection ----------------------------------------

/// A' = g^{-1} A g + g^{-1} dg.
Connection gauge_transform(const Connection& A, const GaugeElement& g);
/// g^{-1} phi.
Form gauge_push(const Form& phi, const GaugeElement& g);

/// Data of the splitting A = sum omega_i with dual fields X_j _| omega_i = delta_ij.
struct HorizontalFrame {
    std::vector<Form> omegas;
    std::vector<PolyVectorField> fields;

    /// Checks the duality relations and sum omega_i == A; throws FrameInvalid.
    void validate(const Connection& A) const;
};

struct HorizontalResult {
    Form delta_phi;
    bool annihilated = false;  // X_i _| delta_phi == 0 for all i
    bool commutes = false;     // cov_d(A, delta_phi) graded-zero
    Form cov_residual;
};

/// Applies the projector composition P_1 o ... o P_k, P_i = I - omega_i ^ (X_i _| _).
HorizontalResult horizontal_delta(const HorizontalFrame& frame, const Connection& A,
                                  const Form& phi);

// -- integral equations ------------------------------------------------------------

/// Fixed-point solve of phi + H(A ^ phi) = J_e + alpha_exact; agrees with the
/// series solvers under the correspondence c = alpha_exact.
Form neumann_integral_solve(const Connection& A, const Form& J_e, const Form& alpha_exact,
                            const Center& center);

/// Matrix fixed point Phi = I + H(Phi Gamma) for an m x m matrix of functions;
/// returns the entries row-major.
std::vector<Series> riemann_graves(const Connection& Gamma, const Center& center);

// -- convergence estimate ----------------------------------------------------------

/// Samples 129 points on the segment from the center to x, takes the maximal
/// Frobenius norm of A's coefficient array, and returns k over that maximum
/// (infinity when A vanishes on the segment). Degree-aware k/||A|| bound; a
/// cruder degree-independent 1/||A|| variant would be smaller for k > 1.
double radius_bound(const Connection& A, const std::vector<double>& x, const Center& center,
                    int k);

}  // namespace antiexact
