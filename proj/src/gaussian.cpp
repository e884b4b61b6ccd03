#include "parab/gaussian.hpp"

namespace parab {

GaussianPoly GaussianPoly::times_i_pow(long k) const {
  long r = k % 4;
  if (r < 0) r += 4;
  switch (r) {
    case 0: return *this;
    case 1: return times_i();
    case 2: return {-re, -im};
    default: return {im, -re};
  }
}

}  // namespace parab
