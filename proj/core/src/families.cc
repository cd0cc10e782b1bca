#include "bidx/families.h"

#include <initializer_list>
#include <utility>

namespace bidx {
namespace {

struct FamilyInfo {
  FamilyTag tag;
  std::string_view name;
  int remainder_order;
  std::initializer_list<std::pair<int, int>> remainder_edges;
};

// Remainder vertex counts exclude isolated vertices; MinimumOrder adds the
// dominating vertex on top.
const FamilyInfo kFamilies[] = {
    {FamilyTag::kS, "S", 1, {}},
    {FamilyTag::kSPlus, "S_PLUS", 2, {{0, 1}}},
    {FamilyTag::kB1, "B1", 3, {{0, 1}, {1, 2}}},
    {FamilyTag::kB2, "B2", 4, {{0, 1}, {2, 3}}},
    {FamilyTag::kG1, "G1", 6, {{0, 1}, {2, 3}, {4, 5}}},
    {FamilyTag::kG2, "G2", 5, {{0, 1}, {1, 2}, {3, 4}}},
    {FamilyTag::kG3, "G3", 4, {{0, 1}, {1, 2}, {2, 3}}},
    {FamilyTag::kG4, "G4", 4, {{0, 1}, {0, 2}, {0, 3}}},
    {FamilyTag::kG5, "G5", 3, {{0, 1}, {1, 2}, {0, 2}}},
    {FamilyTag::kH1, "H1", 5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}},
    {FamilyTag::kH2, "H2", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}},
    {FamilyTag::kH3, "H3", 5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}},
    {FamilyTag::kH4, "H4", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}},
    {FamilyTag::kH5, "H5", 4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}},
    {FamilyTag::kH6, "H6", 6, {{0, 1}, {0, 2}, {0, 3}, {4, 5}}},
    {FamilyTag::kH7, "H7", 6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}},
    {FamilyTag::kH8, "H8", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
    {FamilyTag::kH9, "H9", 6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}}},
    {FamilyTag::kH10, "H10", 7, {{0, 1}, {1, 2}, {3, 4}, {5, 6}}},
    {FamilyTag::kH11, "H11", 8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}},
};

const FamilyInfo& Info(FamilyTag tag) {
  return kFamilies[static_cast<int>(tag)];
}

}  // namespace

std::string_view FamilyName(FamilyTag tag) { return Info(tag).name; }

std::optional<FamilyTag> ParseFamilyTag(std::string_view name) {
  for (const FamilyInfo& info : kFamilies) {
    if (info.name == name) return info.tag;
  }
  if (name == "S+" || name == "SPLUS") return FamilyTag::kSPlus;
  return std::nullopt;
}

int ExtraEdges(FamilyTag tag) {
  return static_cast<int>(Info(tag).remainder_edges.size());
}

int MinimumOrder(FamilyTag tag) {
  if (tag == FamilyTag::kS) return 2;
  return Info(tag).remainder_order + 1;
}

Graph RemainderGraph(FamilyTag tag) {
  const FamilyInfo& info = Info(tag);
  return BuildGraph(info.remainder_order, info.remainder_edges);
}

Graph MakeFamily(FamilyId id) {
  const int minimum = MinimumOrder(id.tag);
  if (id.n < minimum) {
    throw GraphError(std::string(FamilyName(id.tag)) + " needs n >= " +
                     std::to_string(minimum) + ", got n = " +
                     std::to_string(id.n));
  }
  return JoinDominatingVertex(id.n, RemainderGraph(id.tag));
}

}  // namespace bidx
