#include "burgers/sequence.hpp"

#include <cmath>
#include <sstream>

namespace burgers {

std::string to_string(TransformId t) {
  switch (t) {
    case TransformId::Log:
      return "Log";
    case TransformId::D:
      return "D";
    case TransformId::I:
      return "I";
    case TransformId::R:
      return "R";
    case TransformId::SR:
      return "SR";
  }
  return "?";
}

TransformId transform_from_name(const std::string& name) {
  if (name == "Log") return TransformId::Log;
  if (name == "D") return TransformId::D;
  if (name == "I") return TransformId::I;
  if (name == "R") return TransformId::R;
  if (name == "SR") return TransformId::SR;
  throw std::invalid_argument("unknown transform \"" + name + "\"");
}

std::vector<TransformId> parse_stack(const std::string& csv) {
  std::vector<TransformId> stack;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    // tolerate surrounding spaces, e.g. "Log, D, D, I, D"
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    if (a == std::string::npos) {
      throw std::invalid_argument("empty entry in transform stack \"" + csv +
                                  "\"");
    }
    stack.push_back(transform_from_name(item.substr(a, b - a + 1)));
  }
  if (stack.empty()) {
    throw std::invalid_argument("empty transform stack");
  }
  return stack;
}

const std::vector<TransformId>& canonical_stack() {
  static const std::vector<TransformId> stack = {
      TransformId::Log, TransformId::D, TransformId::D, TransformId::I,
      TransformId::D};
  return stack;
}

namespace {

// Unqualified calls below resolve to std:: for double and to the burgers::
// overloads for BigReal.
using std::abs;
using std::log;

template <typename T>
bool entry_is_zero(const T& x) {
  return x == T(0);
}

}  // namespace

template <typename T>
SequenceT<T> apply_transform(TransformId t, const SequenceT<T>& s) {
  const std::size_t n = s.values.size();
  if (n < 3) {
    throw std::invalid_argument("sequence too short for a transform (length " +
                                std::to_string(n) + ")");
  }
  if (s.start_index < 1) {
    throw std::invalid_argument("sequence start index must be >= 1 (got " +
                                std::to_string(s.start_index) + ")");
  }
  SequenceT<T> out;
  out.label = to_string(t) + "(" + s.label + ")";
  out.start_index = s.start_index;
  switch (t) {
    case TransformId::Log:
      out.values.reserve(n);
      for (std::size_t j = 0; j < n; ++j) {
        if (entry_is_zero(s.values[j])) {
          throw TransformError("Log of zero entry",
                               s.start_index + static_cast<long>(j));
        }
        out.values.push_back(log(abs(s.values[j])));
      }
      break;
    case TransformId::D:
      out.values.reserve(n - 1);
      for (std::size_t j = 0; j + 1 < n; ++j) {
        out.values.push_back(s.values[j + 1] - s.values[j]);
      }
      break;
    case TransformId::I:
      out.values.reserve(n);
      for (std::size_t j = 0; j < n; ++j) {
        if (entry_is_zero(s.values[j])) {
          throw TransformError("inverse of zero entry",
                               s.start_index + static_cast<long>(j));
        }
        out.values.push_back(T(1) / s.values[j]);
      }
      break;
    case TransformId::R:
      out.values.reserve(n - 1);
      for (std::size_t j = 0; j + 1 < n; ++j) {
        if (entry_is_zero(s.values[j])) {
          throw TransformError("ratio with zero denominator",
                               s.start_index + static_cast<long>(j));
        }
        out.values.push_back(s.values[j + 1] / s.values[j]);
      }
      break;
    case TransformId::SR:
      out.values.reserve(n - 2);
      out.start_index = s.start_index + 1;
      for (std::size_t j = 1; j + 1 < n; ++j) {
        if (entry_is_zero(s.values[j])) {
          throw TransformError("second ratio with zero denominator",
                               s.start_index + static_cast<long>(j));
        }
        out.values.push_back(s.values[j + 1] * s.values[j - 1] /
                             (s.values[j] * s.values[j]));
      }
      break;
  }
  return out;
}

template SequenceT<double> apply_transform(TransformId,
                                           const SequenceT<double>&);
template SequenceT<BigReal> apply_transform(TransformId,
                                            const SequenceT<BigReal>&);

}  // namespace burgers
