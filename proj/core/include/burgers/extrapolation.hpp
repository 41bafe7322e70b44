#pragma once

#include <optional>
#include <utility>

#include "burgers/sequence.hpp"

namespace burgers {

// Failure inside run_pipeline: stage is the 1-based position in the stack,
// index the offending sequence entry (-1 for structural problems such as a
// terminal stage too short to fit).
struct PipelineError : std::runtime_error {
  std::size_t stage;
  long index;
  PipelineError(const std::string& what, std::size_t stage_, long index_)
      : std::runtime_error(what), stage(stage_), index(index_) {}
};

template <typename T>
struct ExtrapolationReportT {
  std::vector<std::pair<TransformId, SequenceT<T>>> stages;
  T terminal_fit{};            // tail median of the last stage
  std::size_t tail_length = 0; // entries entering the fit: max(3, len/5)
  // Set only for the canonical Log,D,D,I,D stack:
  std::optional<T> c_star;                        // -1 / terminal_fit
  std::optional<SequenceT<T>> discrepancy_trace;  // terminal stage + ln 2
};

using ExtrapolationReport = ExtrapolationReportT<double>;
using BigExtrapolationReport = ExtrapolationReportT<BigReal>;

// Median of the last max(3, n/5) entries; an even tail takes the mean of the
// two middle values.  Requires n >= 3.
template <typename T>
T tail_median(const std::vector<T>& values, std::size_t* used = nullptr);

template <typename T>
ExtrapolationReportT<T> run_pipeline(const SequenceT<T>& input,
                                     const std::vector<TransformId>& stack);

extern template double tail_median(const std::vector<double>&, std::size_t*);
extern template BigReal tail_median(const std::vector<BigReal>&, std::size_t*);
extern template ExtrapolationReportT<double> run_pipeline(
    const SequenceT<double>&, const std::vector<TransformId>&);
extern template ExtrapolationReportT<BigReal> run_pipeline(
    const SequenceT<BigReal>&, const std::vector<TransformId>&);

}  // namespace burgers
