#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "uppart/partition.hpp"

namespace testing {

inline uppart::Partition P(std::vector<int> parts) { return uppart::make_partition(std::move(parts)); }

inline oracle::Shape shape(const uppart::Partition& p) { return {p.parts().begin(), p.parts().end()}; }

inline uppart::Partition from_shape(const oracle::Shape& s) { return uppart::make_partition(s); }

}  // namespace testing
