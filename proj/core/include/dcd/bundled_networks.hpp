#pragma once

#include <span>
#include <string_view>

namespace dcd {

/// A toy network compiled into the library. The same edge lists ship as
/// data/*.edges; experiment configs that name no networks fall back to these.
struct BundledNetwork {
  std::string_view id;
  std::string_view edge_list;
  std::string_view description;
};

std::span<const BundledNetwork> bundled_toy_networks();

}  // namespace dcd
