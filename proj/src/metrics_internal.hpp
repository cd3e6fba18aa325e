#pragma once

#include <span>
#include <vector>

#include "sna/metrics.hpp"

namespace sna::detail {

SummaryStats summarize_or_zero(std::span<const double> values);
std::vector<double> to_doubles(const std::vector<uint32_t>& v);

}  // namespace sna::detail
