#pragma once

#include "parab/rational.hpp"

namespace parab {

// dim of the level p TQFT space of a genus g surface:
// (p/2)^{g-1} * sum_{k=1}^{p-1} sin(k pi / p)^{2-2g}
// evaluated in escalating float precision until it rounds to an integer
// with residue < 1e-6
Int verlinde_dim(long p, long g);

}  // namespace parab
