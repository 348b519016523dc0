#pragma once

namespace regbounds {

// Upper-tail standard normal integral Phi(t) = P(Z > t).
double normal_tail(double t);

// log(Phi(t)), valid for any t. For large t the direct erfc underflows
// around t ~ 37; past t = 30 an asymptotic expansion takes over so that
// products like exp(a + b) * Phi(sqrt(2b)) can be formed in log space.
double log_normal_tail(double t);

// acoth(x) = 0.5 * log((x+1)/(x-1)) for |x| > 1.
double acoth(double x);

}  // namespace regbounds
