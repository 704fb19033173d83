#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "weylpert/perturbation.hpp"

namespace weylpert {

// Truncated Fock-space representation on span{|0>, ..., |D-1>}.  Products of
// truncated matrices are corrupted in the top corruption_band rows/columns;
// everything below is exact (up to float rounding).
struct FockMatrix {
  int dim = 0;
  Eigen::MatrixXd entries;
  int max_power = 0;
  int corruption_band = 0;
};

// sum of coeff(lambda)·mat(a†)^p·mat(a)^q; symmetric when op is Hermitian.
// Requires dim > 2·max_power of op.
FockMatrix build_matrix(const NormalOrderedOperator& op, double lambda_value, int dim);

// Lowest `count` eigenvalues, ascending; throws ValidationError when the
// matrix is not symmetric.
std::vector<double> numeric_spectrum(const FockMatrix& h, int count);

// Eigenvalue of the state with the largest overlap onto |level>.  Sorted
// selection breaks down for odd potentials, whose truncated matrices grow
// spurious deep-lying states below the perturbative (metastable) level.
double tracked_eigenvalue(const FockMatrix& h, unsigned level);

// Exact diagonal matrix element <n|x^p|n> (zero for odd p).
Rational x_power_diagonal(unsigned p, unsigned n);
// Exact squared matrix element <n|x^p|m>²  — rational because the
// irrational content of <n|x^p|m> is a single sqrt(m!·n!)·2^(-p/2) factor.
Rational x_power_element_squared(unsigned p, unsigned n, unsigned m);

struct RSCorrection {
  unsigned level = 0;
  Rational first_order;   // <n|x^p|n>
  Rational second_order;  // sum_{m≠n} <n|x^p|m>² / (n−m), a finite sum
};

RSCorrection rs_corrections(unsigned potential_power, unsigned level);

struct CoefficientComparison {
  int order = 1;
  Radical2Scalar symbolic;
  Rational oracle;
  bool match = false;
};

struct LiteratureComparison {
  int order = 2;
  Rational literature;
  Radical2Scalar symbolic;
  bool match = false;
};

struct GridSample {
  double lambda = 0.0;
  double series_value = 0.0;
  double eigenvalue = 0.0;
  double residual = 0.0;
};

struct ComparisonReport {
  unsigned level = 0;
  int dim = 0;
  std::vector<CoefficientComparison> coefficients;
  std::vector<GridSample> numeric;
  double slope = 0.0;  // log-log fit of residual vs lambda
  std::vector<LiteratureComparison> literature;  // informational only
};

// Validates a solved perturbation series against the independent oracle:
// exact coefficient comparison at orders 1 and 2, then numeric residuals
// over the lambda grid with the expected O(lambda^(k+1)) scaling slope.
// Never throws on mismatch — mismatches are reported.
ComparisonReport compare(const PerturbationResult& result, unsigned level,
                         const std::vector<double>& lambdas, int dim_override = 0);

// Same comparison for a combined eigenvalue series over an explicit
// perturbation operator V (lambda-slice-1 of the Hamiltonian); used for
// multi-term potentials where no single PerturbationResult applies.
ComparisonReport compare_series(const NumberPolynomial& series,
                                const NormalOrderedOperator& hamiltonian, unsigned level,
                                const std::vector<double>& lambdas, int dim,
                                std::optional<Rational> rs_first = std::nullopt,
                                std::optional<Rational> rs_second = std::nullopt);

}  // namespace weylpert
