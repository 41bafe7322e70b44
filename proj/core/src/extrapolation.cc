#include "burgers/extrapolation.hpp"

#include <algorithm>
#include <cmath>

namespace burgers {

namespace {

double ln2_like(const double&) { return std::log(2.0); }
BigReal ln2_like(const BigReal& sample) {
  return log(BigReal(2L, sample.precision_bits()));
}

}  // namespace

template <typename T>
T tail_median(const std::vector<T>& values, std::size_t* used) {
  const std::size_t n = values.size();
  if (n < 3) {
    throw std::invalid_argument("tail_median needs at least 3 entries");
  }
  const std::size_t tail = std::max<std::size_t>(3, n / 5);
  std::vector<T> t(values.end() - static_cast<long>(tail), values.end());
  std::sort(t.begin(), t.end());
  if (used != nullptr) *used = tail;
  if (tail % 2 == 1) return t[tail / 2];
  return (t[tail / 2 - 1] + t[tail / 2]) / T(2);
}

template <typename T>
ExtrapolationReportT<T> run_pipeline(const SequenceT<T>& input,
                                     const std::vector<TransformId>& stack) {
  if (stack.empty()) {
    throw std::invalid_argument("run_pipeline: empty transform stack");
  }
  ExtrapolationReportT<T> report;
  SequenceT<T> current = input;
  for (std::size_t i = 0; i < stack.size(); ++i) {
    try {
      current = apply_transform(stack[i], current);
    } catch (const TransformError& e) {
      throw PipelineError("stage " + std::to_string(i + 1) + " (" +
                              to_string(stack[i]) + "): " + e.what(),
                          i + 1, e.index);
    } catch (const std::invalid_argument& e) {
      throw PipelineError("stage " + std::to_string(i + 1) + " (" +
                              to_string(stack[i]) + "): " + e.what(),
                          i + 1, -1);
    }
    report.stages.emplace_back(stack[i], current);
  }
  if (current.values.size() < 3) {
    throw PipelineError("terminal stage too short for a tail fit (length " +
                            std::to_string(current.values.size()) + ")",
                        stack.size(), -1);
  }
  report.terminal_fit = tail_median(current.values, &report.tail_length);

  if (stack == canonical_stack()) {
    report.c_star = T(-1) / report.terminal_fit;
    SequenceT<T> trace = current;
    const T l2 = ln2_like(current.values.front());
    for (T& v : trace.values) v = v + l2;
    trace.label = current.label + " + ln2";
    report.discrepancy_trace = std::move(trace);
  }
  return report;
}

template double tail_median(const std::vector<double>&, std::size_t*);
template BigReal tail_median(const std::vector<BigReal>&, std::size_t*);
template ExtrapolationReportT<double> run_pipeline(
    const SequenceT<double>&, const std::vector<TransformId>&);
template ExtrapolationReportT<BigReal> run_pipeline(
    const SequenceT<BigReal>&, const std::vector<TransformId>&);

}  // namespace burgers
