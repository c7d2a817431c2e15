#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace zsum {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace zsum
