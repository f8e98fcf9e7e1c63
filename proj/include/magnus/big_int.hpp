#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace magnus {

// Exact integer arithmetic throughout; table entries and Magnus
// coefficients overflow machine words at modest parameters.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace magnus
