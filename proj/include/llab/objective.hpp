#ifndef LLAB_OBJECTIVE_HPP
#define LLAB_OBJECTIVE_HPP

#include "llab/common.hpp"
#include "llab/rng.hpp"

#include <functional>
#include <optional>
#include <string>

namespace llab {

enum class GrowthClass {
  quadratic_growth_compact_min,
  quadratic_growth_unbounded_min,
  unknown,
};

/// An objective with analytic derivatives and (optionally) the geometry of
/// its minimizer set. Evaluation callbacks must be pure: they are shared
/// across threads without synchronization.
struct ObjectiveSpec {
  int dim = 0;
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;
  std::function<double(const Vector&)> laplacian;
  double min_value = 0.0;
  std::function<Vector(const Vector&)> minimizer_projection;  // empty when unknown
  GrowthClass growth_class = GrowthClass::unknown;
  std::string name;

  bool has_projection() const { return static_cast<bool>(minimizer_projection); }

  // value() with the lower-bound sanity check on every evaluation
  double eval_value(const Vector& w) const {
    const double v = value(w);
    if (v < min_value - 1e-12 * (1.0 + std::abs(min_value))) {
      throw NumericalError("objective '" + name + "' evaluated below its declared minimum");
    }
    return v;
  }
  double gap(const Vector& w) const { return eval_value(w) - min_value; }
};

/// Loss ||A(w - w_star)||^2 with an affine minimizer set w_star + Ker(A).
class QuadraticLoss {
 public:
  QuadraticLoss(Matrix A, Vector w_star);

  double value(const Vector& w) const;
  Vector gradient(const Vector& w) const;
  double laplacian() const { return 2.0 * frobenius_sq_; }
  // nearest point of the minimizer set: w minus the Row(A) component of (w - w_star)
  Vector project_to_minimizers(const Vector& w) const;

  const Matrix& matrix() const { return A_; }
  const Vector& w_star() const { return w_star_; }
  double min_singular_positive() const { return sigma_min_pos_; }
  double max_singular() const { return sigma_max_; }
  double frobenius_sq() const { return frobenius_sq_; }
  int rank() const { return rank_; }
  int dim() const { return static_cast<int>(A_.cols()); }

  ObjectiveSpec to_objective() const;

 private:
  Matrix A_;
  Vector w_star_;
  Matrix AtA_;
  Matrix row_space_;  // d x rank, orthonormal columns spanning Row(A)
  double sigma_min_pos_ = 0.0;
  double sigma_max_ = 0.0;
  double frobenius_sq_ = 0.0;
  int rank_ = 0;
};

/// Constants of the PL-type conditions, carried next to the noise level they
/// are used with. ell1 is the PL constant, ell2/ell3 bound the Laplacian.
struct PLCertificate {
  double ell1 = 0.0;
  double ell2 = 0.0;
  double ell3 = 0.0;
  std::function<double(double)> h_bound;  // gradient-norm bound H(gap); empty = unspecified

  struct Scope {
    bool global = true;
    Vector center;
    double radius = 0.0;
  };
  Scope scope;

  bool admissible_with(double sigma) const { return ell1 > sigma * ell2; }
  void validate() const;
};

struct SampleRegion {
  enum class Kind { box, ball } kind = Kind::box;
  Vector lo, hi;      // box
  Vector center;      // ball
  double radius = 0;  // ball

  static SampleRegion box(Vector lo, Vector hi);
  static SampleRegion ball(Vector center, double radius);
  int dim() const { return kind == Kind::box ? static_cast<int>(lo.size()) : static_cast<int>(center.size()); }
  Vector sample(std::uint64_t seed, rng::Domain domain, std::uint32_t index) const;
};

struct ConditionCheck {
  std::int64_t violations = 0;
  double worst_margin = 0.0;  // largest amount by which the condition failed
  bool checked = false;
};

struct AssumptionReport {
  ConditionCheck pl;              // gap <= |grad|^2 / ell1
  ConditionCheck laplacian;       // |lap| <= ell2*gap + ell3
  ConditionCheck gradient_bound;  // |grad| <= H(gap), only when h_bound given
  double h_fitted_c = 0.0;        // fitted C for H(s)=C(1+s) when no h_bound given
  std::int64_t n_samples = 0;
  bool clean() const { return pl.violations == 0 && laplacian.violations == 0 && gradient_bound.violations == 0; }
};

// ---- operations ----

/// PL constants for ||A(w-w*)||^2: ell1 = 4*sigma_min_pos(A)^2, ell2 = 0,
/// ell3 = 2*||A||_F^2. Throws ZeroMatrixError when A has no singular value
/// above 1e-12.
PLCertificate quadratic_pl_constants(const Matrix& A);

AssumptionReport verify_assumption1(const ObjectiveSpec& obj, const PLCertificate& cert,
                                    const SampleRegion& region, std::int64_t n_samples,
                                    std::uint64_t seed);

double distance_to_minimizers(const ObjectiveSpec& obj, const Vector& w);

/// Sample infimum of |grad|^2 / gap over the region; points with
/// gap < gap_floor are excluded.
double estimate_pl_constant(const ObjectiveSpec& obj, const SampleRegion& region,
                            std::int64_t n_samples, double gap_floor, std::uint64_t seed);

inline double default_gap_floor(const ObjectiveSpec& obj) {
  return 1e-8 * (1.0 + std::abs(obj.min_value));
}

// ---- finite-difference oracles (used by verification and tests) ----

Vector fd_gradient(const std::function<double(const Vector&)>& f, const Vector& w,
                   double h_scale = 1e-5);
double fd_hessian_trace(const std::function<double(const Vector&)>& f, const Vector& w,
                        double h_scale = 1e-4);

// ---- shipped objectives ----

/// Constant-zero objective (pure diffusion).
ObjectiveSpec flat_objective(int dim);
/// a*||w||^2 with minimizer 0.
ObjectiveSpec iso_quadratic_objective(int dim, double a = 1.0);

}  // namespace llab

#endif  // LLAB_OBJECTIVE_HPP
