#ifndef DECAYPOIS_CORE_HPP
#define DECAYPOIS_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace decaypois {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptySeriesError : public Error {
 public:
  EmptySeriesError() : Error("series is empty") {}
};

class NegativeCountError : public Error {
 public:
  explicit NegativeCountError(std::size_t index)
      : Error("negative count at index " + std::to_string(index)),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class T0OutOfRangeError : public Error {
 public:
  using Error::Error;
};

class WindowOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

// A closed interval of day offsets relative to the event day t0.
// lo may be negative (days before the event), hi >= lo.
struct Window {
  int lo = 0;
  int hi = 0;

  int length() const { return hi - lo + 1; }
};

/// Throws WindowOutOfRangeError unless lo <= hi.
void validate(const Window& window);

// Event-centered daily count series.  counts[t0_index] is the count on the
// event day; labels, when present, carry calendar metadata (one per point).
struct EventSeries {
  std::vector<std::uint64_t> counts;
  std::size_t t0_index = 0;
  std::vector<std::string> labels;

  std::uint64_t peak_count() const { return counts[t0_index]; }
  // Largest admissible offsets on either side of t0.
  int max_offset_before() const { return -static_cast<int>(t0_index); }
  int max_offset_after() const {
    return static_cast<int>(counts.size() - 1 - t0_index);
  }
};

// Power-law decay independence model parameters: mean gamma/(alpha*|t-t0|+1)^beta.
// alpha: steepness near the event (1/day), beta: decay exponent,
// gamma: peak level (expected count on the event day).
struct IndepParams {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
};

// Conditional AR(2) parameters; s in [0,1] weights lag one against lag two.
// s = 1 gives the AR(1) form.
struct Ar2Params {
  double alpha = 0;
  double beta = 0;
  double s = 1;
};

// Five-parameter unifying model.  w mixes the lag-1 and lag-2 terms; u and v
// blend each lagged count geometrically with the decayed event-day count.
struct UnifiedParams {
  double alpha = 0;
  double beta = 0;
  double w = 0.5;
  double u = 0.5;
  double v = 0.5;
};

// Strict admissibility checks used at fitting and simulation entry points.
// Evaluation routines deliberately accept the alpha = 0 / beta = 0 boundary.
void require_valid(const IndepParams& params);
void require_valid(const Ar2Params& params);
void require_valid(const UnifiedParams& params);

/// Builds an EventSeries from raw integer counts, rejecting empty input,
/// negative counts and an out-of-range event index.
EventSeries validate_series(const std::vector<long long>& raw_counts,
                            long long t0_index,
                            std::vector<std::string> labels = {});

/// Extracts (t - t0, y_t) pairs for the window, in ascending offset order.
/// Throws WindowOutOfRangeError when the shifted window leaves the series.
std::vector<std::pair<int, std::uint64_t>> relative_window_slice(
    const EventSeries& series, const Window& window);

}  // namespace decaypois

#endif  // DECAYPOIS_CORE_HPP
