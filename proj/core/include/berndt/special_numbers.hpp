#pragma once

#include <vector>

#include "berndt/rational.hpp"

namespace berndt {

// Bernoulli numbers from x/(e^x - 1) = sum B_n x^n / n!, so B_1 = -1/2.
Rational bernoulli(int n);
// B_0 .. B_n.
std::vector<Rational> bernoulli_table(int n);

// Secant (Euler) numbers: sec x = sum E_n x^(2n) / (2n)!, all positive.
// E_0 = 1, E_1 = 1, E_2 = 5, E_3 = 61, E_4 = 1385.
Integer euler_number(int n);
std::vector<Integer> euler_table(int n);

}  // namespace berndt
