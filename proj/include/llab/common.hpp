#ifndef LLAB_COMMON_HPP
#define LLAB_COMMON_HPP

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace llab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Configuration / precondition failures. CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Failures of the numerics at run time. CLI maps these to exit code 3.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroMatrixError : ConfigError { using ConfigError::ConfigError; };
struct NoProjectionError : ConfigError { using ConfigError::ConfigError; };
struct NoAdmissibleSamplesError : NumericalError { using NumericalError::NumericalError; };
struct DivergedError : NumericalError { using NumericalError::NumericalError; };
struct EmptyEnsembleError : ConfigError { using ConfigError::ConfigError; };
struct InadmissibleSigmaError : ConfigError { using ConfigError::ConfigError; };
struct ZeroEventProbabilityError : ConfigError { using ConfigError::ConfigError; };
struct StepTooLargeError : ConfigError { using ConfigError::ConfigError; };
struct WeightUnderflowError : NumericalError { using NumericalError::NumericalError; };
struct CflViolationError : ConfigError { using ConfigError::ConfigError; };
struct SolverDivergenceError : NumericalError { using NumericalError::NumericalError; };
struct OrderTooHighError : ConfigError { using ConfigError::ConfigError; };
struct WindowTooShortError : ConfigError { using ConfigError::ConfigError; };
struct TimeMismatchError : ConfigError { using ConfigError::ConfigError; };
struct ShapeMismatchError : ConfigError { using ConfigError::ConfigError; };
struct MissingDataError : ConfigError { using ConfigError::ConfigError; };
struct NoOverlapError : ConfigError { using ConfigError::ConfigError; };

struct ConfigInvalidError : ConfigError {
  ConfigInvalidError(const std::string& path, const std::string& reason)
      : ConfigError("invalid config at '" + path + "': " + reason),
        path(path),
        reason(reason) {}
  std::string path;
  std::string reason;
};

// Neumaier-compensated accumulator. Serial and order-fixed, so reductions
// are reproducible to well below 1e-12 regardless of caller parallelism.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Runs fn(begin, end) over disjoint index ranges, one per worker. Results
// must be written to disjoint slots so the outcome is independent of the
// thread count.
inline void parallel_for_ranges(std::int64_t n,
                                const std::function<void(std::int64_t, std::int64_t)>& fn,
                                int n_threads = 0) {
  if (n <= 0) return;
  int hw = n_threads > 0 ? n_threads : static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 1 || n < 2) {
    fn(0, n);
    return;
  }
  const std::int64_t n_blocks = std::min<std::int64_t>(hw, n);
  const std::int64_t block = (n + n_blocks - 1) / n_blocks;
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(n_blocks));
  for (std::int64_t b = 0; b < n_blocks; ++b) {
    const std::int64_t lo = b * block;
    const std::int64_t hi = std::min(n, lo + block);
    if (lo >= hi) break;
    workers.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& w : workers) w.join();
}

inline constexpr const char* kVersion = "0.1.0";

}  // namespace llab

#endif  // LLAB_COMMON_HPP
