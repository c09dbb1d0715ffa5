#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace uppart {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace uppart
