#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace quap {

// One term of a bracket table: [X_alpha, X_beta] contains coeff * X_gamma.
struct BracketTerm {
  int alpha;
  int beta;
  int gamma;
  double coeff;
};

// Finite-dimensional real Lie algebra stored by structure constants.
// Brackets are ingested sparsely: a pair supplied in one orientation has its
// mirror filled in (antisymmetric closure); a pair supplied in both must
// already be antisymmetric or construction fails.
class LieAlgebra {
 public:
  LieAlgebra(int dim, std::vector<std::string> names,
             const std::vector<BracketTerm>& brackets);

  int dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;

  // c^gamma_{alpha beta}
  double structure_constant(int alpha, int beta, int gamma) const {
    return c_[(static_cast<size_t>(alpha) * dim_ + beta) * dim_ + gamma];
  }

  // Deterministic sparse export: alpha < beta entries with nonzero coeff.
  std::vector<BracketTerm> bracket_terms() const;

  // Bilinear bracket of coefficient vectors.
  Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  // Matrix of ad_x acting on coefficient vectors.
  Eigen::MatrixXd ad(const Eigen::VectorXd& x) const;

 private:
  int dim_;
  std::vector<std::string> names_;
  std::vector<double> c_;  // dense dim^3, index (alpha, beta, gamma)
};

// Max-norm Jacobi residual over all generator triples; 0 for a Lie algebra.
double jacobi_residual(const LieAlgebra& L);

// New generators Y_i = sum_j S(j,i) X_j for invertible S.
LieAlgebra change_basis(const LieAlgebra& L, const Eigen::MatrixXd& S,
                        const std::vector<std::string>& new_names = {});

// Expand the pairwise commutators of a list of matrices over their own span
// (least squares); errors if the span is not closed or the constants are not
// real to within tol.
LieAlgebra algebra_from_matrices(const std::vector<std::string>& names,
                                 const std::vector<Eigen::MatrixXcd>& gens,
                                 double tol = 1e-9);

// Restrict to a subspace given by span columns (coordinates in the ambient
// basis); errors if the span is not bracket-closed to within tol.
LieAlgebra subalgebra(const LieAlgebra& L, const Eigen::MatrixXd& span,
                      const std::vector<std::string>& names = {},
                      double tol = 1e-9);

// Structural invariants used to compare algebras without choosing bases.
struct AlgebraFingerprint {
  int dim;
  std::vector<int> derived_series;      // dims until stabilization
  std::vector<int> lower_central_series;
  int center_dim;
  int killing_rank;
  int killing_positive;
  int killing_negative;
};

AlgebraFingerprint fingerprint(const LieAlgebra& L, double tol = 1e-9);
bool operator==(const AlgebraFingerprint& a, const AlgebraFingerprint& b);

// JSON round trip: {"dim": n, "names": [...], "brackets": [[a,b,g,coeff],...]}
std::string to_json(const LieAlgebra& L);
LieAlgebra algebra_from_json(const std::string& text);

}  // namespace quap
