#include "decaypois/core.hpp"

namespace decaypois {

void validate(const Window& window) {
  if (window.lo > window.hi) {
    throw WindowOutOfRangeError("window lo " + std::to_string(window.lo) +
                                " exceeds hi " + std::to_string(window.hi));
  }
}

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0)) {
    throw InvalidParamsError(std::string(name) + " must be > 0");
  }
}

void require_unit_interval(double value, const char* name) {
  if (!(value >= 0 && value <= 1)) {
    throw InvalidParamsError(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

void require_valid(const IndepParams& params) {
  require_positive(params.alpha, "alpha");
  require_positive(params.beta, "beta");
  require_positive(params.gamma, "gamma");
}

void require_valid(const Ar2Params& params) {
  require_positive(params.alpha, "alpha");
  require_positive(params.beta, "beta");
  require_unit_interval(params.s, "s");
}

void require_valid(const UnifiedParams& params) {
  require_positive(params.alpha, "alpha");
  require_positive(params.beta, "beta");
  require_unit_interval(params.w, "w");
  require_unit_interval(params.u, "u");
  require_unit_interval(params.v, "v");
}

EventSeries validate_series(const std::vector<long long>& raw_counts,
                            long long t0_index,
                            std::vector<std::string> labels) {
  if (raw_counts.empty()) throw EmptySeriesError();
  for (std::size_t i = 0; i < raw_counts.size(); ++i) {
    if (raw_counts[i] < 0) throw NegativeCountError(i);
  }
  if (t0_index < 0 ||
      t0_index >= static_cast<long long>(raw_counts.size())) {
    throw T0OutOfRangeError("t0 index " + std::to_string(t0_index) +
                            " outside series of length " +
                            std::to_string(raw_counts.size()));
  }
  if (!labels.empty() && labels.size() != raw_counts.size()) {
    throw Error("labels length does not match counts length");
  }
  EventSeries series;
  series.counts.assign(raw_counts.begin(), raw_counts.end());
  series.t0_index = static_cast<std::size_t>(t0_index);
  series.labels = std::move(labels);
  return series;
}

std::vector<std::pair<int, std::uint64_t>> relative_window_slice(
    const EventSeries& series, const Window& window) {
  validate(window);
  const long long lo = static_cast<long long>(series.t0_index) + window.lo;
  const long long hi = static_cast<long long>(series.t0_index) + window.hi;
  if (lo < 0 || hi >= static_cast<long long>(series.counts.size())) {
    throw WindowOutOfRangeError(
        "window [" + std::to_string(window.lo) + ", " +
        std::to_string(window.hi) + "] leaves the series");
  }
  std::vector<std::pair<int, std::uint64_t>> out;
  out.reserve(static_cast<std::size_t>(window.length()));
  for (int offset = window.lo; offset <= window.hi; ++offset) {
    const auto idx =
        static_cast<std::size_t>(static_cast<long long>(series.t0_index) + offset);
    out.emplace_back(offset, series.counts[idx]);
  }
  return out;
}

}  // namespace decaypois
