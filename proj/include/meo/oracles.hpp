#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "meo/objectives.hpp"

namespace meo::oracles {

// Strictly positive entries summing to 1 (tolerance 1e-10).
void require_probability_vector(const Eigen::VectorXd& p);

double classical_kl(const Eigen::VectorXd& p, const Eigen::VectorXd& q);
double classical_renyi_q(const Eigen::VectorXd& p, const Eigen::VectorXd& q, double alpha);

// Central finite differences over the Hermitian parameterization: symmetric
// (i,j)/(j,i) pairs perturbed jointly, diagonal entries on the real part.
Hermitian finite_diff_gradient(const std::function<double(const Hermitian&)>& objective,
                               const Hermitian& omega, double step);

// Hessian superoperator action evaluated by adaptive quadrature of its
// integral representation; independent of the divided-difference path.
Hermitian quadrature_hessian(const ProblemInstance& inst, const Hermitian& omega,
                             const Hermitian& x);

struct IdentityCheck {
    double alpha;
    double k;
    double quadrature;
    double closed_form;
    double rel_deviation;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    double max_rel_deviation = 0.0;
};

// Compares -c1(alpha) int t^{alpha/(alpha-1)} (k+t)^{-3} dt (alpha < 1/2)
// and -c2(alpha) int t^{(alpha-1)/alpha} (k+t)^{-3} dt (alpha >= 1/2)
// against their closed forms over the given grids.
IdentityReport check_integral_identities(const std::vector<double>& alpha_grid,
                                         const std::vector<double>& k_grid);

// Scalar quadrature J(p, k) = -(sin(p pi)/pi) int_0^inf t^p (k+t)^{-3} dt,
// p in [-1, 1); evaluated after one integration by parts so the p = -1
// endpoint is regular.  Closed form: p(p-1)/2 * k^{p-2}.
double power_kernel_integral(double p, double k);

enum class Conditioning { Raw, WellConditioned };

struct InstanceSpec {
    int dim;
    std::uint64_t seed;
    Conditioning conditioning = Conditioning::Raw;
    double mixing = 1.0; // t in (0, 1]; WellConditioned mixes t*sample + (1-t)*I/d
    bool commuting = false;
};

// Seeded Ginibre-style sampling (mt19937_64 + Box-Muller; platform
// independent).  rho is a normalized G G^dag; sigma likewise.
ProblemInstance random_instance(const InstanceSpec& spec, ProblemKind kind);

// Sampling helpers shared by tests and benchmarks.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed);
    double uniform();               // [0, 1)
    double gaussian();              // standard normal, Box-Muller
    Eigen::MatrixXcd ginibre(int dim);
    Eigen::MatrixXcd random_unitary(int dim);
    Hermitian random_hermitian(int dim);          // Gaussian entries, unit HS norm
    Hermitian random_density(int dim);            // G G^dag / Tr
    Hermitian random_positive_definite(int dim);  // G G^dag + small ridge

  private:
    // mt19937_64 output is fully specified by the standard; the Gaussian
    // mapping is our own Box-Muller, so streams are platform independent.
    std::mt19937_64 engine_;
};

}  // namespace meo::oracles
