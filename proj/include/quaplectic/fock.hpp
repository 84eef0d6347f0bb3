#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace quap {

// Mode signature (p, q): p timelike modes listed first, then q spacelike.
// All published cases have p = 1; p = 0 gives the Euclidean oscillator.
struct Signature {
  int p;
  int q;
  int modes() const { return p + q; }
  double eta(int a) const { return a < p ? -1.0 : 1.0; }
};

// Finite proxy for the oscillator Hilbert space: each mode keeps occupation
// numbers 0..cutoff. Truncation breaks the ladder relations only at the top,
// so verified statements are projected onto the interior window
// n_i <= cutoff - interior_margin for every mode.
struct Truncation {
  int cutoff;
  int interior_margin = 2;
};

struct OperatorMatrix {
  std::string label;
  Eigen::MatrixXcd mat;
};

struct SpectrumReport {
  Eigen::VectorXd eigenvalues;  // ascending
  std::string method;           // "fock" or "grid"
  double max_imag = 0.0;        // largest imaginary part discarded
};

// Ladder matrices over the tensor-product occupation basis, lexicographic
// multi-index with mode 0 slowest. Raising/lowering pairs are exact matrix
// adjoints; the timelike assignment swaps their roles so that
// [Z-_a, Z+_b] = eta_ab on the interior window.
struct RepresentationBundle {
  Signature signature;
  Truncation truncation;
  Eigen::Index dim;
  std::vector<Eigen::MatrixXcd> zplus;
  std::vector<Eigen::MatrixXcd> zminus;
  std::vector<std::vector<Eigen::MatrixXcd>> zab;  // Z_ab = Z+_a Z-_b
  Eigen::MatrixXcd number_op;                      // eta^{ab} Z+_a Z-_b
  Eigen::MatrixXcd u_op;                           // eta^{ab} (Z_ab + eps_ab I)
  Eigen::MatrixXcd identity;
  Eigen::MatrixXcd interior_projector;
  Eigen::MatrixXcd eps_block;                      // modes x modes, Hermitian
  std::vector<Eigen::Index> interior;              // window basis indices
};

// eps_block: optional finite Hermitian stand-in for the internal-symmetry
// block (zero means trivial). Genuine unitary irreps of the noncompact
// internal symmetry are infinite dimensional; finite blocks exercise the
// algebraic relations only. max_elements caps dim^2 of one dense matrix.
RepresentationBundle build_rep(const Signature& sig, const Truncation& trunc,
                               const Eigen::MatrixXcd& eps_block = {},
                               Eigen::Index max_elements = 4'000'000);

// Max-norm of the interior-projected matrix.
double interior_max(const RepresentationBundle& rep, const Eigen::MatrixXcd& m);

// Square submatrix over the interior window.
Eigen::MatrixXcd interior_restrict(const RepresentationBundle& rep,
                                   const Eigen::MatrixXcd& m);

// Eigenvalues of the interior restriction; self-adjoint solver when the
// restriction is Hermitian to 1e-9, otherwise a general solve with the
// imaginary parts reported and dropped.
SpectrumReport interior_spectrum(const RepresentationBundle& rep,
                                 const Eigen::MatrixXcd& m);

// Interior-projected residuals of the canonical and number-conserving-block
// relations, plus the invariance statements for W_ab = Z+_a Z-_b - I A_ab:
//   [Z-_a, Z+_b] = eta_ab I        [Z+_a, Z+_b] = [Z-_a, Z-_b] = 0
//   [Z_ab, Z+_c] = eta_bc Z+_a     [Z_ab, Z-_c] = -eta_ac Z-_b
//   [Z_ab, Z_cd] = eta_bc Z_ad - eta_ad Z_cb
//   [W_ab, Z+-_c] = 0 and W_ab = -eps_ab I
struct CommutatorReport {
  double max_ccr;
  double max_ladder_ladder;
  double max_unitary_ladder;
  double max_unitary_unitary;
  double max_w_ladder;
  double w_equals_minus_eps;
  double w_first_term_only;  // [Z+_a Z-_b, Z+-_c] alone: O(1), not small
};

CommutatorReport commutator_residuals(const RepresentationBundle& rep);

// Invariant chains: C_k traces powers of (W eta), D_k traces powers of
// (A eta), both as modes x modes arrays of operators. c2_crosscheck is the
// interior distance of C_2 from N - U; it vanishes for trivial eps and is
// reported (not asserted) otherwise, since scalar eps blocks cannot close
// the internal-symmetry algebra.
struct CasimirSet {
  std::vector<OperatorMatrix> c_ops;  // k = 1..max_order
  std::vector<OperatorMatrix> d_ops;
  std::vector<SpectrumReport> c_spectra;
  std::vector<SpectrumReport> d_spectra;
  double max_mutual_commutator;       // all pairs among C_k, D_k
  double max_c_generator_commutator;  // C_k against every generator
  double max_d_unitary_commutator;    // D_k against the Z_ab block
  double c2_crosscheck;
};

CasimirSet casimir_ops(const RepresentationBundle& rep, int max_order = 4);

// Interior residual of the contracted-chain identity
//   trace((Z eta)^k) = N (N - n I)^{k-1}
// for a given integer label n.
double g_identity(const RepresentationBundle& rep, int k, int n);

// Scans integer labels and returns the one minimizing the k = 2 residual.
struct GConstantResolution {
  int n;
  double residual;
};
GConstantResolution resolve_g_constant(const RepresentationBundle& rep);

// g_identity at the oracle-resolved label.
double g_identity(const RepresentationBundle& rep, int k);

// Order-k wave operator: k = 1 is the eta-contracted number operator; higher
// orders contract the ladder bilinear through a chain of eps links raised
// with eta. Hermitian for k <= 2 by construction.
OperatorMatrix wave_operator(const RepresentationBundle& rep, int k,
                             const Eigen::MatrixXcd& eps_block = {});

// Label arithmetic for the second-order eigenvalue relation
//   f2 = (d2 - c2 - g2(d1 + c1)) / 2 with g2(x) = x (x - n).
double f_label_check(double c1, double c2, double d1, double d2, double n);

}  // namespace quap
