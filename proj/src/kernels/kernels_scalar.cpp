#include "oddaut/kernels.hpp"

namespace oddaut::kernels {
namespace {

bool gather_equals_scalar(const Elem* expected, const Elem* src, const Elem* idx, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (expected[i] != src[idx[i]]) return false;
  }
  return true;
}

bool gather2_equals_scalar(const Elem* src1, const Elem* idx1, const Elem* src2, const Elem* idx2,
                           std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (src1[idx1[i]] != src2[idx2[i]]) return false;
  }
  return true;
}

void gather_scalar(Elem* dst, const Elem* src, const Elem* idx, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = src[idx[i]];
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", gather_equals_scalar, gather2_equals_scalar, gather_scalar};
  return table;
}

}  // namespace oddaut::kernels
