#pragma once

#include "gonc/rational.hpp"

namespace gonc {

Int factorial(int n);
Int binomial(int n, int k);

Int falling_factorial(const Int& x, int k);  // x (x-1) ... (x-k+1)
Int rising_factorial(const Int& x, int k);   // x (x+1) ... (x+k-1)

Int stirling2(int n, int k);  // set partitions of [n] into k blocks
Int lah(int n, int k);        // n!/k! * C(n-1, k-1)
Int fubini(int n);            // ordered partitions of [n]

}  // namespace gonc
