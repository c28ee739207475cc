#include "dcd/bundled_networks.hpp"

#include <array>

namespace dcd {

namespace {

// Kept byte-identical with the files under data/; tests enforce it.
constexpr std::string_view kToynet1 =
    "# toynet1 - two directed 3-cycles bridged head-to-tail, with a 2-node tail\n"
    "# SCCs: {a,b,c}, {d,e,f}; peripheral DAG nodes: g, h\n"
    "a b\n"
    "b c\n"
    "c a\n"
    "d e\n"
    "e f\n"
    "f d\n"
    "c d\n"
    "f g\n"
    "g h\n";

constexpr std::string_view kToynet2 =
    "# toynet2 - chorded 4-cycle feeding a 3-cycle, with a source and a sink\n"
    "# SCCs: {p,q,r,s}, {t,u,v}; peripheral DAG nodes: w (source), x (sink)\n"
    "p q\n"
    "q r\n"
    "r s\n"
    "s p\n"
    "p r\n"
    "t u\n"
    "u v\n"
    "v t\n"
    "s t\n"
    "w p\n"
    "v x\n";

constexpr std::string_view kToynet3 =
    "# toynet3 - two 2-cycles chained into a 3-cycle, with a 2-node tail\n"
    "# SCCs: {a,b}, {c,d}, {e,f,g}; peripheral DAG nodes: h, i\n"
    "a b\n"
    "b a\n"
    "c d\n"
    "d c\n"
    "e f\n"
    "f g\n"
    "g e\n"
    "b c\n"
    "d e\n"
    "g h\n"
    "h i\n";

constexpr std::array<BundledNetwork, 3> kNetworks{{
    {"toynet1", kToynet1,
     "two directed 3-cycles bridged head-to-tail, with a 2-node tail"},
    {"toynet2", kToynet2,
     "chorded 4-cycle feeding a 3-cycle, with a source and a sink"},
    {"toynet3", kToynet3,
     "two 2-cycles chained into a 3-cycle, with a 2-node tail"},
}};

}  // namespace

std::span<const BundledNetwork> bundled_toy_networks() { return kNetworks; }

}  // namespace dcd
