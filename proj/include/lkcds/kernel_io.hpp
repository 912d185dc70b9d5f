#pragma once

#include <string>
#include <string_view>

#include "lkcds/pipeline.hpp"

namespace lkcds {

/// Text form tagged `lkcds/1` with sections [graph] [Z] [map] [params]
/// [provenance] and, for shortcut instances, [solution]. Field order is fixed,
/// so equal instances serialize to equal bytes.
std::string serialize_kernel(const KernelInstance& inst);
KernelInstance parse_kernel(std::string_view text);
KernelInstance read_kernel_file(const std::string& path);

}  // namespace lkcds
