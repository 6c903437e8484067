#pragma once

#include <array>
#include <string_view>

#include "frcc/connection.hpp"

namespace frcc {

// Graded RCC relation family between two fuzzy regions. DC is exactly the
// complement of C.
struct RelationVector {
  Grade c;         // connection
  Grade dc;        // disconnected, 1 - C
  Grade o;         // overlap
  Grade p;         // part of (first argument part of second)
  Grade p_inv;     // part of, swapped
  Grade eq;        // equal
  Grade pp;        // proper part
  Grade pp_inv;    // proper part, swapped
  Grade po;        // partial overlap
  Grade ec;        // externally connected
  Grade tpp;       // tangential proper part
  Grade tpp_inv;   // tangential proper part, swapped
  Grade ntpp;      // non-tangential proper part
  Grade ntpp_inv;  // non-tangential proper part, swapped
};

inline constexpr std::array<std::string_view, 14> kRelationNames = {
    "C",  "DC",  "O",  "P",   "P_inv",   "EQ",   "PP",
    "PP_inv", "PO", "EC", "TPP", "TPP_inv", "NTPP", "NTPP_inv"};

// Throws std::invalid_argument on an unknown relation name.
Grade relation_component(const RelationVector& v, std::string_view name);

// Degree of co-location: max over the union of both corner lattices of
// T(A(p), B(p)).
Grade overlap(const FuzzyRegion& a, const FuzzyRegion& b, const ConnectionConfig& cfg);

// Degree to which every point of a is near some point of b:
// min over a's corner lattice of I_T(A(p), near_b(p)), where near_b is the
// exact point-to-region nearness supremum.
Grade part_of(const FuzzyRegion& a, const FuzzyRegion& b, const ConnectionConfig& cfg);

RelationVector relation_vector(const FuzzyRegion& a, const FuzzyRegion& b,
                               const ConnectionConfig& cfg);

}  // namespace frcc
