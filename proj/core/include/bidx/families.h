#ifndef BIDX_FAMILIES_H_
#define BIDX_FAMILIES_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "bidx/graph.h"

namespace bidx {

// Named graphs with a dominating vertex: vertex 0 is joined to every other
// vertex, and the remaining vertices carry a small "remainder" graph with k
// edges (k = 0..4 for trees through tetracyclic graphs).
//
// Remainders:
//   S      empty            S_PLUS  K2
//   B1     P3               B2      2K2
//   G1     3K2              G2      P3 + K2          G3  P4
//   G4     K_{1,3}          G5      K3
//   H4     K_{1,4}          H5      paw              H8  C4
//   H1 chair, H2 P5, H3 K3 + K2, H6 K_{1,3} + K2, H7 2P3, H9 P4 + K2,
//   H10 P3 + 2K2, H11 4K2
//
// The B, G, H4, H5 and H8 remainders are forced by the closed-form index
// values they must reproduce. The other H labels follow ascending canonical
// graph6 order of the remainder and carry no meaning beyond that.
enum class FamilyTag {
  kS,
  kSPlus,
  kB1,
  kB2,
  kG1,
  kG2,
  kG3,
  kG4,
  kG5,
  kH1,
  kH2,
  kH3,
  kH4,
  kH5,
  kH6,
  kH7,
  kH8,
  kH9,
  kH10,
  kH11,
};

inline constexpr std::array<FamilyTag, 20> kAllFamilyTags = {
    FamilyTag::kS,   FamilyTag::kSPlus, FamilyTag::kB1,  FamilyTag::kB2,
    FamilyTag::kG1,  FamilyTag::kG2,    FamilyTag::kG3,  FamilyTag::kG4,
    FamilyTag::kG5,  FamilyTag::kH1,    FamilyTag::kH2,  FamilyTag::kH3,
    FamilyTag::kH4,  FamilyTag::kH5,    FamilyTag::kH6,  FamilyTag::kH7,
    FamilyTag::kH8,  FamilyTag::kH9,    FamilyTag::kH10, FamilyTag::kH11,
};

struct FamilyId {
  FamilyTag tag = FamilyTag::kS;
  int n = 2;
};

std::string_view FamilyName(FamilyTag tag);
std::optional<FamilyTag> ParseFamilyTag(std::string_view name);

// Number of remainder edges, i.e. m - (n - 1).
int ExtraEdges(FamilyTag tag);

// Smallest n for which the family exists.
int MinimumOrder(FamilyTag tag);

// The remainder graph on exactly its non-isolated vertices (K1 for S).
Graph RemainderGraph(FamilyTag tag);

// Throws GraphError naming the minimum when id.n is too small.
Graph MakeFamily(FamilyId id);

}  // namespace bidx

#endif  // BIDX_FAMILIES_H_
