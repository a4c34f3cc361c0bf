#include "reference_data.hpp"

namespace hadaq::ref {

HadamardMatrix subband_order_16() {
  HadamardMatrix natural = HadamardMatrix::sylvester(4);
  std::vector<std::int32_t> rows(kSubbandRowOrder.begin(), kSubbandRowOrder.end());
  return equivalence_transform(natural, Permutation(std::move(rows)), SignVector::all_plus(16),
                               Permutation::identity(16), SignVector::all_plus(16));
}

}  // namespace hadaq::ref
