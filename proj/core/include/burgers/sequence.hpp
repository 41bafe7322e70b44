#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "burgers/bigreal.hpp"

namespace burgers {

// The five elementary sequence transformations:
//   Log: v_k = ln|s_k|            (length unchanged)
//   D:   v_k = s_{k+1} - s_k      (length - 1)
//   I:   v_k = 1/s_k              (length unchanged)
//   R:   v_k = s_{k+1}/s_k        (length - 1)
//   SR:  v_k = s_{k+1} s_{k-1} / s_k^2  (length - 2, start_index + 1)
enum class TransformId { Log, D, I, R, SR };

std::string to_string(TransformId t);
TransformId transform_from_name(const std::string& name);

// Parses a comma-separated stack such as "Log,D,D,I,D".
std::vector<TransformId> parse_stack(const std::string& csv);

// The 5-stage stack whose terminal constant encodes C* = -1/u5.
const std::vector<TransformId>& canonical_stack();

// Data-dependent transform failure (log of zero, division by zero), carrying
// the sequence index of the offending entry.
struct TransformError : std::runtime_error {
  long index;
  TransformError(const std::string& what, long idx)
      : std::runtime_error(what + " at index " + std::to_string(idx)),
        index(idx) {}
};

// A finite sequence s_k, k = start_index, start_index+1, ...  Instantiated
// for double (solver spectra) and BigReal (exact-engine data); pipelines run
// in the input's precision with no silent down-conversion.
template <typename T>
struct SequenceT {
  long start_index = 1;
  std::vector<T> values;
  std::string label;
};

using Sequence = SequenceT<double>;
using BigSequence = SequenceT<BigReal>;

template <typename T>
SequenceT<T> apply_transform(TransformId t, const SequenceT<T>& s);

extern template SequenceT<double> apply_transform(TransformId,
                                                  const SequenceT<double>&);
extern template SequenceT<BigReal> apply_transform(TransformId,
                                                   const SequenceT<BigReal>&);

}  // namespace burgers
