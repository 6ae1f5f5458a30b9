#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace graphweight {

/// Arbitrary-precision signed integer used for every exact count and sum.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace graphweight
