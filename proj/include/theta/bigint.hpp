#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace theta {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace theta
