// Generated by tools/keytables/gen_header.py; do not edit.
#pragma once

#include <string_view>

namespace otisham::tables {

struct KeyEdgeRow {
  std::string_view family;
  std::string_view key;
};

inline constexpr KeyEdgeRow kDerivedKeyEdges[] = {
    {"oe_3_4", "e:L1:R1:R2"},
    {"oe_3_4", "e:R1:R2:R3"},
    {"oe_3_6", "e:L1:R2:R3"},
    {"oe_3_6", "e:L2:R1:R2"},
    {"oe_3_6", "e:R2:R4:R5"},
    {"oe_3_6", "e:R3:L1:L2"},
    {"oe_3_8", "e:L1:R4:R5"},
    {"oe_3_8", "e:L1:R7:c"},
    {"oe_3_8", "e:L2:R2:R3"},
    {"oe_3_8", "e:R1:L2:c"},
    {"oe_3_8", "e:R1:R4:R5"},
    {"oe_3_8", "e:R1:R7:c"},
    {"oe_3_8", "e:R2:L2:c"},
    {"oe_3_8", "e:R2:R3:R4"},
    {"oe_3_8", "e:R3:R4:R5"},
    {"oe_3_8", "e:R4:L2:c"},
    {"oe_3_m0", "e:L1:R2:R3"},
    {"oe_3_m0", "e:R-1:Rm1:Rm2"},
    {"oe_3_m0", "e:R-1:Rm4:R-3"},
    {"oe_3_m0", "e:R-1:Rm4:Rm5"},
    {"oe_3_m0", "e:R-1:c:R1"},
    {"oe_3_m0", "e:R-2:R2:R3"},
    {"oe_3_m0", "e:R-2:Rm1:Rm2"},
    {"oe_3_m0", "e:R-2:Rm4:R-3"},
    {"oe_3_m0", "e:R-2:Rm4:Rm5"},
    {"oe_3_m0", "e:R-3:R1:R2"},
    {"oe_3_m0", "e:R1:Rm1:Rm2"},
    {"oe_3_m0", "e:R1:Rm4:Rm5"},
    {"oe_3_m0", "e:R2:L1:L2"},
    {"oe_3_m0", "e:R2:Rm2:Rm3"},
    {"oe_3_m0", "e:R3:Rm0:Rm1"},
    {"oe_3_m0", "e:R3:Rm3:Rm4"},
    {"oe_3_m0", "e:Rm0:Rm1:Rm2"},
    {"oe_3_m0", "e:Rm0:Rm4:Rm5"},
    {"oe_3_m0", "e:Rm1:L2:c"},
    {"oe_3_m0", "e:Rm1:Rm2:Rm3"},
    {"oe_3_m0", "e:Rm1:Rm5:Rm0"},
    {"oe_3_m0", "e:Rm2:Rm0:Rm1"},
    {"oe_3_m0", "e:Rm2:Rm3:Rm4"},
    {"oe_3_m0", "e:Rm3:Rm4:Rm5"},
    {"oe_3_m0", "e:Rm4:L1:L2"},
    {"oe_3_m2", "e:L1:R-2:R-1"},
    {"oe_3_m2", "e:L2:Rm0:R-3"},
    {"oe_3_m2", "e:R-1:R2:R3"},
    {"oe_3_m2", "e:R-2:Rm1:Rm2"},
    {"oe_3_m2", "e:R-3:R2:R3"},
    {"oe_3_m2", "e:R1:R3:Rm0"},
    {"oe_3_m2", "e:R1:Rm3:Rm4"},
    {"oe_3_m2", "e:R1:Rm5:Rm0"},
    {"oe_3_m2", "e:R2:c:L1"},
    {"oe_3_m2", "e:R3:Rm4:Rm5"},
    {"oe_3_m2", "e:Rm0:L2:c"},
    {"oe_3_m2", "e:Rm0:R-1:c"},
    {"oe_3_m2", "e:Rm0:R2:R3"},
    {"oe_3_m2", "e:Rm0:Rm2:Rm3"},
    {"oe_3_m2", "e:Rm1:Rm1:Rm2"},
    {"oe_3_m2", "e:Rm1:Rm4:Rm5"},
    {"oe_3_m2", "e:Rm2:R-1:c"},
    {"oe_3_m2", "e:Rm2:R3:Rm0"},
    {"oe_3_m2", "e:Rm2:Rm1:Rm2"},
    {"oe_3_m2", "e:Rm2:c:L1"},
    {"oe_3_m2", "e:Rm2:c:R1"},
    {"oe_3_m2", "e:Rm3:Rm3:Rm4"},
    {"oe_3_m2", "e:Rm4:R-1:c"},
    {"oe_3_m2", "e:Rm4:Rm0:R-3"},
    {"oe_3_m2", "e:Rm4:c:L1"},
    {"oe_3_m2", "e:Rm5:Rm0:Rm1"},
    {"oe_3_m2", "n:Rm0:-2"},
    {"oe_3_m2", "n:Rm0:-4"},
    {"oe_3_m2", "n:Rm0:4"},
    {"oe_3_m2", "n:Rm2:-3"},
    {"oe_3_m4", "e:L1:R2:R3"},
    {"oe_3_m4", "e:L1:Rm1:Rm2"},
    {"oe_3_m4", "e:L1:Rm4:Rm5"},
    {"oe_3_m4", "e:L2:R1:R2"},
    {"oe_3_m4", "e:L2:R3:Rm0"},
    {"oe_3_m4", "e:L2:Rm2:R-3"},
    {"oe_3_m4", "e:L2:Rm2:Rm3"},
    {"oe_3_m4", "e:L2:Rm5:Rm0"},
    {"oe_3_m4", "e:R-1:R1:R2"},
    {"oe_3_m4", "e:R-1:R3:Rm0"},
    {"oe_3_m4", "e:R-1:Rm5:Rm0"},
    {"oe_3_m4", "e:R-2:R3:Rm0"},
    {"oe_3_m4", "e:R-2:Rm1:Rm2"},
    {"oe_3_m4", "e:R-2:Rm5:Rm0"},
    {"oe_3_m4", "e:R1:Rm1:Rm2"},
    {"oe_3_m4", "e:R2:Rm0:Rm1"},
    {"oe_3_m4", "e:R2:Rm4:Rm5"},
    {"oe_3_m4", "e:Rm0:Rm2:Rm3"},
    {"oe_3_m4", "e:Rm1:R-1:c"},
    {"oe_3_m4", "e:Rm1:Rm0:Rm1"},
    {"oe_3_m4", "e:Rm1:Rm3:Rm4"},
    {"oe_3_m4", "e:Rm2:R-2:R-1"},
    {"oe_3_m4", "e:Rm4:R2:R3"},
    {"oe_3_m4", "e:Rm4:Rm4:Rm5"},
    {"oe_3_m4", "n:Rm0:-4"},
    {"oe_3_m4", "n:Rm0:2"},
    {"oe_3_m4", "n:Rm1:-4"},
    {"oe_3_m4", "n:Rm1:2"},
    {"oe_5_4", "e:L1:L2:L3"},
    {"oe_5_4", "e:L1:R1:R2"},
    {"oe_5_4", "e:L2:L4:c"},
    {"oe_5_4", "e:L3:R2:R3"},
    {"oe_5_4", "e:R1:R2:R3"},
    {"oe_5_6", "e:L1:L2:L3"},
    {"oe_5_6", "e:L1:R1:R2"},
    {"oe_5_6", "e:L1:R3:R4"},
    {"oe_5_6", "e:L2:L4:c"},
    {"oe_5_6", "e:L2:R4:R5"},
    {"oe_5_6", "e:L4:R3:R4"},
    {"oe_5_6", "e:R1:R4:R5"},
    {"oe_5_6", "e:R2:R4:R5"},
    {"oe_5_6", "e:R3:L2:L3"},
    {"oe_5_8", "e:L1:L3:L4"},
    {"oe_5_8", "e:L1:R4:R5"},
    {"oe_5_8", "e:L2:L3:L4"},
    {"oe_5_8", "e:L2:R2:R3"},
    {"oe_5_8", "e:L3:R1:R2"},
    {"oe_5_8", "e:L3:R4:R5"},
    {"oe_5_8", "e:R1:R6:R7"},
    {"oe_5_8", "e:R2:R4:R5"},
    {"oe_5_8", "e:R3:R6:R7"},
    {"oe_5_m0", "e:L1:R-2:R-1"},
    {"oe_5_m0", "e:L1:R2:R3"},
    {"oe_5_m0", "e:L1:Rm1:Rm2"},
    {"oe_5_m0", "e:L1:Rm4:R-3"},
    {"oe_5_m0", "e:L1:Rm4:Rm5"},
    {"oe_5_m0", "e:L2:L3:L4"},
    {"oe_5_m0", "e:L2:R2:R3"},
    {"oe_5_m0", "e:L3:R-2:R-1"},
    {"oe_5_m0", "e:L3:Rm3:Rm4"},
    {"oe_5_m0", "e:L4:Rm2:Rm3"},
    {"oe_5_m0", "e:R-1:R-3:R-2"},
    {"oe_5_m0", "e:R-1:R1:R2"},
    {"oe_5_m0", "e:R-1:Rm2:Rm3"},
    {"oe_5_m0", "e:R-1:Rm5:Rm0"},
    {"oe_5_m0", "e:R-2:Rm3:Rm4"},
    {"oe_5_m0", "e:R-3:Rm0:Rm1"},
    {"oe_5_m0", "e:R2:Rm1:Rm2"},
    {"oe_5_m0", "e:R2:Rm4:R-3"},
    {"oe_5_m0", "e:Rm0:L3:L4"},
    {"oe_5_m0", "e:Rm0:Rm2:Rm3"},
    {"oe_5_m0", "e:Rm0:Rm4:R-3"},
    {"oe_5_m0", "e:Rm1:L1:L2"},
    {"oe_5_m0", "e:Rm1:Rm4:Rm5"},
    {"oe_5_m0", "e:Rm2:Rm1:Rm2"},
    {"oe_5_m0", "e:Rm4:L3:L4"},
    {"oe_5_m0", "e:Rm4:Rm3:Rm4"},
    {"oe_5_m0", "e:Rm5:Rm0:Rm1"},
    {"oe_5_m0", "n:Rm0:-2"},
    {"oe_5_m0", "n:Rm0:-4"},
    {"oe_5_m0", "n:Rm0:2"},
    {"oe_5_m0", "n:Rm0:4"},
    {"oe_5_m2", "e:L1:R1:R2"},
    {"oe_5_m2", "e:L1:Rm2:Rm3"},
    {"oe_5_m2", "e:L2:L3:L4"},
    {"oe_5_m2", "e:L2:R-3:R-2"},
    {"oe_5_m2", "e:L2:c:R1"},
    {"oe_5_m2", "e:L3:R-2:R-1"},
    {"oe_5_m2", "e:L3:R2:R3"},
    {"oe_5_m2", "e:L3:Rm1:Rm2"},
    {"oe_5_m2", "e:L3:Rm4:Rm5"},
    {"oe_5_m2", "e:L4:R-3:R-2"},
    {"oe_5_m2", "e:L4:R2:R3"},
    {"oe_5_m2", "e:L4:Rm1:Rm2"},
    {"oe_5_m2", "e:L4:Rm4:Rm5"},
    {"oe_5_m2", "e:R-1:R-3:R-2"},
    {"oe_5_m2", "e:R-1:R3:Rm0"},
    {"oe_5_m2", "e:R-2:Rm1:Rm2"},
    {"oe_5_m2", "e:R-2:c:R1"},
    {"oe_5_m2", "e:R-3:L1:L2"},
    {"oe_5_m2", "e:R-3:Rm4:Rm5"},
    {"oe_5_m2", "e:R1:Rm1:Rm2"},
    {"oe_5_m2", "e:R1:Rm4:Rm5"},
    {"oe_5_m2", "e:R2:Rm0:R-3"},
    {"oe_5_m2", "e:R2:Rm0:Rm1"},
    {"oe_5_m2", "e:R2:Rm3:Rm4"},
    {"oe_5_m2", "e:R3:Rm3:Rm4"},
    {"oe_5_m2", "e:Rm0:Rm1:Rm2"},
    {"oe_5_m2", "e:Rm1:L3:L4"},
    {"oe_5_m2", "e:Rm1:R1:R2"},
    {"oe_5_m2", "e:Rm1:Rm2:Rm3"},
    {"oe_5_m2", "e:Rm2:Rm3:Rm4"},
    {"oe_5_m2", "e:Rm3:Rm4:Rm5"},
    {"oe_5_m2", "e:Rm4:L3:L4"},
    {"oe_5_m2", "e:Rm4:Rm5:Rm0"},
    {"oe_5_m2", "e:Rm5:Rm0:Rm1"},
    {"oe_5_m4", "e:L1:L2:L3"},
    {"oe_5_m4", "e:L1:L4:c"},
    {"oe_5_m4", "e:L1:R-3:R-2"},
    {"oe_5_m4", "e:L1:R2:R3"},
    {"oe_5_m4", "e:L1:Rm0:Rm1"},
    {"oe_5_m4", "e:L1:Rm3:Rm4"},
    {"oe_5_m4", "e:L1:c:R1"},
    {"oe_5_m4", "e:L2:L4:c"},
    {"oe_5_m4", "e:L2:R2:R3"},
    {"oe_5_m4", "e:L2:Rm0:Rm1"},
    {"oe_5_m4", "e:L2:Rm3:Rm4"},
    {"oe_5_m4", "e:L2:c:R1"},
    {"oe_5_m4", "e:L3:L4:c"},
    {"oe_5_m4", "e:L3:c:R1"},
    {"oe_5_m4", "e:L4:R-1:c"},
    {"oe_5_m4", "e:R-1:Rm0:Rm1"},
    {"oe_5_m4", "e:R-2:R3:Rm0"},
    {"oe_5_m4", "e:R-2:Rm2:R-3"},
    {"oe_5_m4", "e:R-2:Rm2:Rm3"},
    {"oe_5_m4", "e:R-2:Rm5:Rm0"},
    {"oe_5_m4", "e:R-3:L3:L4"},
    {"oe_5_m4", "e:R-3:R2:R3"},
    {"oe_5_m4", "e:R-3:Rm1:Rm2"},
    {"oe_5_m4", "e:R-3:Rm4:Rm5"},
    {"oe_5_m4", "e:R1:Rm1:Rm2"},
    {"oe_5_m4", "e:R2:Rm1:Rm2"},
    {"oe_5_m4", "e:R2:Rm3:Rm4"},
    {"oe_5_m4", "e:R2:Rm5:Rm0"},
    {"oe_5_m4", "e:R3:Rm0:Rm1"},
    {"oe_5_m4", "e:Rm0:L1:L2"},
    {"oe_5_m4", "e:Rm0:Rm1:Rm2"},
    {"oe_5_m4", "e:Rm0:Rm4:Rm5"},
    {"oe_5_m4", "e:Rm1:Rm2:Rm3"},
    {"oe_5_m4", "e:Rm1:Rm5:Rm0"},
    {"oe_5_m4", "e:Rm2:Rm0:Rm1"},
    {"oe_5_m4", "e:Rm2:Rm3:Rm4"},
    {"oe_5_m4", "e:Rm3:L1:L2"},
    {"oe_5_m4", "e:Rm3:Rm4:Rm5"},
    {"oe_7_4", "e:L1:L2:L3"},
    {"oe_7_4", "e:L1:R1:R2"},
    {"oe_7_4", "e:L2:L4:L5"},
    {"oe_7_4", "e:L2:R3:c"},
    {"oe_7_4", "e:L2:c:R1"},
    {"oe_7_4", "e:L3:L4:L5"},
    {"oe_7_4", "e:L4:L6:c"},
    {"oe_7_4", "e:L4:R2:R3"},
    {"oe_7_4", "e:L5:R2:R3"},
    {"oe_7_4", "e:R1:R2:R3"},
    {"oe_7_6", "e:L1:L4:L5"},
    {"oe_7_6", "e:L1:L6:c"},
    {"oe_7_6", "e:L1:R3:R4"},
    {"oe_7_6", "e:L1:R5:c"},
    {"oe_7_6", "e:L1:c:R1"},
    {"oe_7_6", "e:L2:R5:c"},
    {"oe_7_6", "e:L2:c:R1"},
    {"oe_7_6", "e:L3:L4:L5"},
    {"oe_7_6", "e:L3:L6:c"},
    {"oe_7_6", "e:L3:R2:R3"},
    {"oe_7_6", "e:L3:R5:c"},
    {"oe_7_6", "e:L4:L6:c"},
    {"oe_7_6", "e:L4:R1:R2"},
    {"oe_7_6", "e:L4:R5:c"},
    {"oe_7_6", "e:L5:L6:c"},
    {"oe_7_6", "e:L5:R2:R3"},
    {"oe_7_6", "e:L5:R5:c"},
    {"oe_7_6", "e:R1:R3:R4"},
    {"oe_7_8", "e:L1:L2:L3"},
    {"oe_7_8", "e:L1:L5:L6"},
    {"oe_7_8", "e:L1:R3:R4"},
    {"oe_7_8", "e:L2:L5:L6"},
    {"oe_7_8", "e:L2:R3:R4"},
    {"oe_7_8", "e:L3:R1:R2"},
    {"oe_7_8", "e:L3:R5:R6"},
    {"oe_7_8", "e:L4:R6:R7"},
    {"oe_7_8", "e:L5:R3:R4"},
    {"oe_7_8", "e:L6:R1:R2"},
    {"oe_7_8", "e:R1:R3:R4"},
    {"oe_7_8", "e:R3:R5:R6"},
    {"oe_7_8", "e:R4:L2:L3"},
    {"oe_7_8", "e:R4:R7:c"},
    {"oe_7_8", "e:R4:c:R1"},
    {"oe_7_m0", "e:L1:L2:L3"},
    {"oe_7_m0", "e:L1:R-1:c"},
    {"oe_7_m0", "e:L2:L6:c"},
    {"oe_7_m0", "e:L2:R-2:R-1"},
    {"oe_7_m0", "e:L2:Rm2:Rm3"},
    {"oe_7_m0", "e:L3:L5:L6"},
    {"oe_7_m0", "e:L3:R-3:R-2"},
    {"oe_7_m0", "e:L3:R1:R2"},
    {"oe_7_m0", "e:L3:Rm0:Rm1"},
    {"oe_7_m0", "e:L4:L5:L6"},
    {"oe_7_m0", "e:L4:R-3:R-2"},
    {"oe_7_m0", "e:L4:R1:R2"},
    {"oe_7_m0", "e:L4:Rm1:Rm2"},
    {"oe_7_m0", "e:L5:Rm4:Rm5"},
    {"oe_7_m0", "e:L6:R1:R2"},
    {"oe_7_m0", "e:L6:Rm1:Rm2"},
    {"oe_7_m0", "e:R-1:L2:L3"},
    {"oe_7_m0", "e:R-2:R2:R3"},
    {"oe_7_m0", "e:R-2:Rm4:R-3"},
    {"oe_7_m0", "e:R-2:Rm4:Rm5"},
    {"oe_7_m0", "e:R-3:R3:Rm0"},
    {"oe_7_m0", "e:R-3:Rm2:Rm3"},
    {"oe_7_m0", "e:R-3:Rm5:Rm0"},
    {"oe_7_m0", "e:R1:Rm0:Rm1"},
    {"oe_7_m0", "e:R1:Rm3:Rm4"},
    {"oe_7_m0", "e:R2:R3:Rm0"},
    {"oe_7_m0", "e:R2:Rm2:Rm3"},
    {"oe_7_m0", "e:R2:Rm5:Rm0"},
    {"oe_7_m0", "e:R3:Rm1:Rm2"},
    {"oe_7_m0", "e:R3:Rm4:Rm5"},
    {"oe_7_m0", "e:Rm1:L2:L3"},
    {"oe_7_m0", "e:Rm1:R-1:c"},
    {"oe_7_m0", "e:Rm4:L1:L2"},
    {"oe_7_m2", "e:L1:L2:L3"},
    {"oe_7_m2", "e:L1:R-1:c"},
    {"oe_7_m2", "e:L1:R2:R3"},
    {"oe_7_m2", "e:L1:Rm1:Rm2"},
    {"oe_7_m2", "e:L1:Rm4:Rm5"},
    {"oe_7_m2", "e:L2:R-1:c"},
    {"oe_7_m2", "e:L2:R2:R3"},
    {"oe_7_m2", "e:L2:Rm1:Rm2"},
    {"oe_7_m2", "e:L4:L1:L2"},
    {"oe_7_m2", "e:L4:R1:R2"},
    {"oe_7_m2", "e:L4:Rm3:Rm4"},
    {"oe_7_m2", "e:L4:Rm5:Rm0"},
    {"oe_7_m2", "e:L5:R-3:R-2"},
    {"oe_7_m2", "e:L5:R1:R2"},
    {"oe_7_m2", "e:L5:Rm1:Rm2"},
    {"oe_7_m2", "e:L5:Rm4:Rm5"},
    {"oe_7_m2", "e:L6:R-1:c"},
    {"oe_7_m2", "e:L6:R-3:R-2"},
    {"oe_7_m2", "e:L6:R2:R3"},
    {"oe_7_m2", "e:L6:Rm1:Rm2"},
    {"oe_7_m2", "e:L6:Rm4:Rm5"},
    {"oe_7_m2", "e:R-1:L2:L3"},
    {"oe_7_m2", "e:R-1:Rm1:Rm2"},
    {"oe_7_m2", "e:R-2:R3:Rm0"},
    {"oe_7_m2", "e:R-2:Rm1:Rm2"},
    {"oe_7_m2", "e:R-2:Rm5:Rm0"},
    {"oe_7_m2", "e:R-3:Rm3:Rm4"},
    {"oe_7_m2", "e:R1:R-1:c"},
    {"oe_7_m2", "e:R1:Rm0:R-3"},
    {"oe_7_m2", "e:R1:Rm3:Rm4"},
    {"oe_7_m2", "e:R2:Rm0:Rm1"},
    {"oe_7_m2", "e:R2:Rm3:Rm4"},
    {"oe_7_m2", "e:R3:Rm2:Rm3"},
    {"oe_7_m2", "e:Rm0:Rm1:Rm2"},
    {"oe_7_m2", "e:Rm2:Rm2:Rm3"},
    {"oe_7_m2", "e:Rm2:Rm5:Rm0"},
    {"oe_7_m2", "e:Rm3:Rm0:Rm1"},
    {"oe_7_m2", "e:Rm4:Rm4:Rm5"},
    {"oe_7_m2", "n:Rm0:1"},
    {"oe_7_m2", "n:Rm0:3"},
    {"oe_7_m2", "n:Rm1:-4"},
    {"oe_7_m2", "n:Rm1:4"},
    {"oe_7_m4", "e:L1:L4:L5"},
    {"oe_7_m4", "e:L1:R2:R3"},
    {"oe_7_m4", "e:L1:Rm1:Rm2"},
    {"oe_7_m4", "e:L1:Rm4:Rm5"},
    {"oe_7_m4", "e:L2:L5:L6"},
    {"oe_7_m4", "e:L2:R3:Rm0"},
    {"oe_7_m4", "e:L2:Rm3:Rm4"},
    {"oe_7_m4", "e:L2:Rm5:Rm0"},
    {"oe_7_m4", "e:L3:L5:L6"},
    {"oe_7_m4", "e:L3:R-2:R-1"},
    {"oe_7_m4", "e:L3:Rm1:Rm2"},
    {"oe_7_m4", "e:L4:L6:c"},
    {"oe_7_m4", "e:L4:R-1:c"},
    {"oe_7_m4", "e:L4:R-3:R-2"},
    {"oe_7_m4", "e:L4:R2:R3"},
    {"oe_7_m4", "e:L4:Rm3:Rm4"},
    {"oe_7_m4", "e:L5:R-2:R-1"},
    {"oe_7_m4", "e:L5:Rm4:Rm5"},
    {"oe_7_m4", "e:L6:R-2:R-1"},
    {"oe_7_m4", "e:L6:Rm3:Rm4"},
    {"oe_7_m4", "e:R-2:L2:L3"},
    {"oe_7_m4", "e:R-2:R2:R3"},
    {"oe_7_m4", "e:R-2:Rm1:Rm2"},
    {"oe_7_m4", "e:R-2:Rm3:Rm4"},
    {"oe_7_m4", "e:R-3:R1:R2"},
    {"oe_7_m4", "e:R-3:R3:Rm0"},
    {"oe_7_m4", "e:R1:R2:R3"},
    {"oe_7_m4", "e:R2:Rm0:Rm1"},
    {"oe_7_m4", "e:R3:Rm2:Rm3"},
    {"oe_7_m4", "e:R3:Rm4:Rm5"},
    {"oe_7_m4", "e:Rm0:L5:L6"},
    {"oe_7_m4", "e:Rm0:Rm2:R-3"},
    {"oe_7_m4", "e:Rm0:Rm2:Rm3"},
    {"oe_7_m4", "e:Rm1:L1:L2"},
    {"oe_7_m4", "e:Rm1:Rm1:Rm2"},
    {"oe_7_m4", "e:Rm1:Rm4:Rm5"},
    {"oe_7_m4", "e:Rm2:Rm1:Rm2"},
    {"oe_7_m4", "e:Rm3:R-1:c"},
    {"oe_7_m4", "e:Rm3:Rm3:Rm4"},
    {"oe_7_m4", "e:Rm5:Rm0:Rm1"},
    {"oe_7_m4", "n:Rm0:-2"},
    {"oe_7_m4", "n:Rm0:-4"},
    {"oe_7_m4", "n:Rm0:4"},
    {"oe_7_m4", "n:Rm2:-3"},
    {"oe_m1_4", "e:L-1:Lm0:Lm1"},
    {"oe_m1_4", "e:L-2:Lm0:Lm1"},
    {"oe_m1_4", "e:L-2:Lm2:Lm3"},
    {"oe_m1_4", "e:L-2:c:R1"},
    {"oe_m1_4", "e:L-3:L-1:c"},
    {"oe_m1_4", "e:L-3:L2:L3"},
    {"oe_m1_4", "e:L-3:Lm3:Lm4"},
    {"oe_m1_4", "e:L-3:R3:c"},
    {"oe_m1_4", "e:L-3:c:R1"},
    {"oe_m1_4", "e:L1:L2:L3"},
    {"oe_m1_4", "e:L1:Lm4:Lm5"},
    {"oe_m1_4", "e:L1:R2:R3"},
    {"oe_m1_4", "e:L2:L-3:L-2"},
    {"oe_m1_4", "e:L2:Lm0:Lm1"},
    {"oe_m1_4", "e:L2:Lm3:Lm4"},
    {"oe_m1_4", "e:L2:c:R1"},
    {"oe_m1_4", "e:L3:Lm0:Lm1"},
    {"oe_m1_4", "e:Lm0:Lm1:Lm2"},
    {"oe_m1_4", "e:Lm0:Lm4:Lm5"},
    {"oe_m1_4", "e:Lm0:R3:c"},
    {"oe_m1_4", "e:Lm0:c:R1"},
    {"oe_m1_4", "e:Lm1:L1:L2"},
    {"oe_m1_4", "e:Lm1:Lm2:Lm3"},
    {"oe_m1_4", "e:Lm1:Lm5:Lm0"},
    {"oe_m1_4", "e:Lm2:L-1:c"},
    {"oe_m1_4", "e:Lm2:Lm0:Lm1"},
    {"oe_m1_4", "e:Lm2:Lm3:Lm4"},
    {"oe_m1_4", "e:Lm2:R3:c"},
    {"oe_m1_4", "e:Lm3:Lm4:Lm5"},
    {"oe_m1_4", "e:Lm4:L-1:c"},
    {"oe_m1_4", "e:Lm4:R3:c"},
    {"oe_m1_4", "e:Lm4:c:R1"},
    {"oe_m1_4", "e:R1:R2:R3"},
    {"oe_m1_6", "e:L-1:Lm3:Lm4"},
    {"oe_m1_6", "e:L-1:R1:R2"},
    {"oe_m1_6", "e:L-2:Lm0:Lm1"},
    {"oe_m1_6", "e:L-2:Lm3:Lm4"},
    {"oe_m1_6", "e:L-2:R3:R4"},
    {"oe_m1_6", "e:L-2:c:L1"},
    {"oe_m1_6", "e:L-2:c:R1"},
    {"oe_m1_6", "e:L-3:L1:L2"},
    {"oe_m1_6", "e:L-3:Lm1:Lm2"},
    {"oe_m1_6", "e:L-3:R4:R5"},
    {"oe_m1_6", "e:L1:Lm0:Lm1"},
    {"oe_m1_6", "e:L1:R2:R3"},
    {"oe_m1_6", "e:L2:R4:R5"},
    {"oe_m1_6", "e:L3:Lm2:Lm3"},
    {"oe_m1_6", "e:Lm0:L-2:L-1"},
    {"oe_m1_6", "e:Lm0:Lm2:Lm3"},
    {"oe_m1_6", "e:Lm0:R2:R3"},
    {"oe_m1_6", "e:Lm1:L-3:L-2"},
    {"oe_m1_6", "e:Lm1:L2:L3"},
    {"oe_m1_6", "e:Lm1:Lm1:Lm2"},
    {"oe_m1_6", "e:Lm1:Lm4:Lm5"},
    {"oe_m1_6", "e:Lm1:R3:R4"},
    {"oe_m1_6", "e:Lm1:R5:c"},
    {"oe_m1_6", "e:Lm1:c:R1"},
    {"oe_m1_6", "e:Lm2:L1:L2"},
    {"oe_m1_6", "e:Lm2:Lm1:Lm2"},
    {"oe_m1_6", "e:Lm3:Lm3:Lm4"},
    {"oe_m1_6", "e:Lm3:R1:R2"},
    {"oe_m1_6", "e:Lm4:R4:R5"},
    {"oe_m1_6", "e:Lm5:Lm0:Lm1"},
    {"oe_m1_6", "e:Lm5:R2:R3"},
    {"oe_m1_6", "e:R2:R3:R4"},
    {"oe_m1_6", "n:Lm0:-2"},
    {"oe_m1_6", "n:Lm0:-4"},
    {"oe_m1_6", "n:Lm0:4"},
    {"oe_m1_6", "n:Lm2:-3"},
    {"oe_m1_8", "e:L-2:Lm0:Lm1"},
    {"oe_m1_8", "e:L-2:R2:R3"},
    {"oe_m1_8", "e:L-3:L2:L3"},
    {"oe_m1_8", "e:L-3:Lm1:Lm2"},
    {"oe_m1_8", "e:L-3:Lm4:Lm5"},
    {"oe_m1_8", "e:L-3:R3:R4"},
    {"oe_m1_8", "e:L-3:R6:R7"},
    {"oe_m1_8", "e:L1:Lm0:Lm1"},
    {"oe_m1_8", "e:L1:Lm3:Lm4"},
    {"oe_m1_8", "e:L1:R3:R4"},
    {"oe_m1_8", "e:L1:R6:R7"},
    {"oe_m1_8", "e:L2:Lm3:Lm4"},
    {"oe_m1_8", "e:L2:Lm5:Lm0"},
    {"oe_m1_8", "e:L2:R2:R3"},
    {"oe_m1_8", "e:L2:R7:c"},
    {"oe_m1_8", "e:L3:Lm2:Lm3"},
    {"oe_m1_8", "e:L3:R1:R2"},
    {"oe_m1_8", "e:Lm0:Lm1:Lm2"},
    {"oe_m1_8", "e:Lm0:R3:R4"},
    {"oe_m1_8", "e:Lm0:R6:R7"},
    {"oe_m1_8", "e:Lm1:L3:Lm0"},
    {"oe_m1_8", "e:Lm1:R1:R2"},
    {"oe_m1_8", "e:Lm2:Lm2:Lm3"},
    {"oe_m1_8", "e:Lm2:Lm5:Lm0"},
    {"oe_m1_8", "e:Lm2:R2:R3"},
    {"oe_m1_8", "e:Lm2:R4:R5"},
    {"oe_m1_8", "e:Lm3:L-1:c"},
    {"oe_m1_8", "e:Lm3:Lm0:Lm1"},
    {"oe_m1_8", "e:Lm3:R2:R3"},
    {"oe_m1_8", "e:Lm3:R5:R6"},
    {"oe_m1_8", "e:Lm3:R7:c"},
    {"oe_m1_8", "e:Lm4:Lm4:Lm5"},
    {"oe_m1_8", "e:Lm4:R6:R7"},
    {"oe_m1_8", "e:R1:R3:R4"},
    {"oe_m1_8", "e:R3:L-2:L-1"},
    {"oe_m1_8", "e:R3:R4:R5"},
    {"oe_m1_8", "e:R4:L-1:c"},
    {"oe_m1_8", "e:R4:R7:c"},
    {"oe_m1_8", "e:R7:L1:L2"},
    {"oe_m1_8", "n:Lm0:1"},
    {"oe_m1_8", "n:Lm0:3"},
    {"oe_m1_8", "n:Lm1:-4"},
    {"oe_m1_8", "n:Lm1:4"},
    {"oe_m1_m0", "e:L-1:L-3:L-2"},
    {"oe_m1_m0", "e:L-1:L2:L3"},
    {"oe_m1_m0", "e:L-1:Lm0:Lm1"},
    {"oe_m1_m0", "e:L-1:Lm2:Lm3"},
    {"oe_m1_m0", "e:L-1:R-1:c"},
    {"oe_m1_m0", "e:L-1:R2:R3"},
    {"oe_m1_m0", "e:L-1:Rm2:Rm3"},
    {"oe_m1_m0", "e:L-1:Rm4:R-3"},
    {"oe_m1_m0", "e:L-2:L1:L2"},
    {"oe_m1_m0", "e:L-2:L3:Lm0"},
    {"oe_m1_m0", "e:L-2:Lm5:L-3"},
    {"oe_m1_m0", "e:L-2:Lm5:Lm0"},
    {"oe_m1_m0", "e:L-2:R-1:c"},
    {"oe_m1_m0", "e:L-2:Rm2:Rm3"},
    {"oe_m1_m0", "e:L-2:Rm4:R-3"},
    {"oe_m1_m0", "e:L-2:Rm4:Rm5"},
    {"oe_m1_m0", "e:L-3:Lm0:Lm1"},
    {"oe_m1_m0", "e:L-3:Lm2:Lm3"},
    {"oe_m1_m0", "e:L-3:R-1:c"},
    {"oe_m1_m0", "e:L-3:Rm1:Rm2"},
    {"oe_m1_m0", "e:L-3:Rm3:Rm4"},
    {"oe_m1_m0", "e:L1:L-1:c"},
    {"oe_m1_m0", "e:L1:L2:L3"},
    {"oe_m1_m0", "e:L1:Lm0:Lm1"},
    {"oe_m1_m0", "e:L1:R-1:c"},
    {"oe_m1_m0", "e:L1:R2:R3"},
    {"oe_m1_m0", "e:L1:Rm4:R-3"},
    {"oe_m1_m0", "e:L1:Rm4:Rm5"},
    {"oe_m1_m0", "e:L2:L-1:c"},
    {"oe_m1_m0", "e:L2:Lm2:Lm3"},
    {"oe_m1_m0", "e:L2:R2:R3"},
    {"oe_m1_m0", "e:L2:Rm1:Rm2"},
    {"oe_m1_m0", "e:L2:Rm3:Rm4"},
    {"oe_m1_m0", "e:L3:R2:R3"},
    {"oe_m1_m0", "e:L3:Rm0:Rm1"},
    {"oe_m1_m0", "e:Lm0:Lm0:Lm1"},
    {"oe_m1_m0", "e:Lm0:Lm3:Lm4"},
    {"oe_m1_m0", "e:Lm0:R-2:R-1"},
    {"oe_m1_m0", "e:Lm0:R1:R2"},
    {"oe_m1_m0", "e:Lm0:Rm0:Rm1"},
    {"oe_m1_m0", "e:Lm0:Rm2:Rm3"},
    {"oe_m1_m0", "e:Lm1:L2:L3"},
    {"oe_m1_m0", "e:Lm1:Lm4:Lm5"},
    {"oe_m1_m0", "e:Lm1:R-1:c"},
    {"oe_m1_m0", "e:Lm1:R1:R2"},
    {"oe_m1_m0", "e:Lm1:Rm1:Rm2"},
    {"oe_m1_m0", "e:Lm1:Rm4:R-3"},
    {"oe_m1_m0", "e:Lm1:Rm4:Rm5"},
    {"oe_m1_m0", "e:Lm2:Lm2:Lm3"},
    {"oe_m1_m0", "e:Lm2:R2:R3"},
    {"oe_m1_m0", "e:Lm2:Rm1:Rm2"},
    {"oe_m1_m0", "e:Lm3:L-1:c"},
    {"oe_m1_m0", "e:Lm3:Lm5:L-3"},
    {"oe_m1_m0", "e:Lm3:R-1:c"},
    {"oe_m1_m0", "e:Lm3:Rm4:R-3"},
    {"oe_m1_m0", "e:Lm3:Rm4:Rm5"},
    {"oe_m1_m0", "e:Lm3:c:R1"},
    {"oe_m1_m0", "e:Lm4:R2:R3"},
    {"oe_m1_m0", "e:Lm4:Rm1:Rm2"},
    {"oe_m1_m0", "e:Lm5:R-2:R-1"},
    {"oe_m1_m0", "e:Lm5:Rm0:Rm1"},
    {"oe_m1_m0", "e:R-1:R3:Rm0"},
    {"oe_m1_m0", "e:R-1:Rm2:Rm3"},
    {"oe_m1_m0", "e:R-1:Rm5:Rm0"},
    {"oe_m1_m0", "e:R-2:Rm2:Rm3"},
    {"oe_m1_m0", "e:R-2:Rm4:Rm5"},
    {"oe_m1_m0", "e:R1:Rm1:Rm2"},
    {"oe_m1_m0", "e:R2:Rm0:Rm1"},
    {"oe_m1_m0", "e:R2:Rm4:R-3"},
    {"oe_m1_m0", "e:R2:Rm4:Rm5"},
    {"oe_m1_m0", "e:Rm0:L-1:c"},
    {"oe_m1_m0", "e:Rm0:R-1:c"},
    {"oe_m1_m0", "e:Rm0:Rm2:Rm3"},
    {"oe_m1_m0", "e:Rm0:Rm4:R-3"},
    {"oe_m1_m0", "e:Rm0:c:L1"},
    {"oe_m1_m0", "e:Rm1:Rm1:Rm2"},
    {"oe_m1_m0", "e:Rm1:Rm4:Rm5"},
    {"oe_m1_m0", "e:Rm2:R3:Rm0"},
    {"oe_m1_m0", "e:Rm2:Rm1:Rm2"},
    {"oe_m1_m0", "e:Rm3:Rm3:Rm4"},
    {"oe_m1_m0", "e:Rm4:Lm3:Lm4"},
    {"oe_m1_m0", "e:Rm5:Rm0:Rm1"},
    {"oe_m1_m0", "n:Lm0:3"},
    {"oe_m1_m0", "n:Lm1:-3"},
    {"oe_m1_m0", "n:Lm1:3"},
    {"oe_m1_m0", "n:Lm3:2"},
    {"oe_m1_m0", "n:Rm0:-2"},
    {"oe_m1_m0", "n:Rm0:-4"},
    {"oe_m1_m0", "n:Rm0:4"},
    {"oe_m1_m0", "n:Rm2:-3"},
    {"oe_m1_m2", "e:L-1:Lm2:Lm3"},
    {"oe_m1_m2", "e:L-1:R-1:c"},
    {"oe_m1_m2", "e:L-1:Rm0:R-3"},
    {"oe_m1_m2", "e:L-1:Rm0:Rm1"},
    {"oe_m1_m2", "e:L-1:Rm3:Rm4"},
    {"oe_m1_m2", "e:L-2:L2:L3"},
    {"oe_m1_m2", "e:L-2:Lm4:Lm5"},
    {"oe_m1_m2", "e:L-2:R1:R2"},
    {"oe_m1_m2", "e:L-2:Rm0:R-3"},
    {"oe_m1_m2", "e:L-2:Rm0:Rm1"},
    {"oe_m1_m2", "e:L-2:Rm3:Rm4"},
    {"oe_m1_m2", "e:L-3:L1:L2"},
    {"oe_m1_m2", "e:L-3:Lm2:Lm3"},
    {"oe_m1_m2", "e:L-3:Rm0:R-3"},
    {"oe_m1_m2", "e:L-3:Rm2:Rm3"},
    {"oe_m1_m2", "e:L-3:Rm4:Rm5"},
    {"oe_m1_m2", "e:L1:R-2:R-1"},
    {"oe_m1_m2", "e:L1:R3:Rm0"},
    {"oe_m1_m2", "e:L1:Rm2:Rm3"},
    {"oe_m1_m2", "e:L1:Rm5:Rm0"},
    {"oe_m1_m2", "e:L2:L-1:c"},
    {"oe_m1_m2", "e:L2:Lm0:Lm1"},
    {"oe_m1_m2", "e:L2:Lm3:Lm4"},
    {"oe_m1_m2", "e:L2:R-3:R-2"},
    {"oe_m1_m2", "e:L2:R2:R3"},
    {"oe_m1_m2", "e:L2:Rm1:Rm2"},
    {"oe_m1_m2", "e:L2:Rm4:Rm5"},
    {"oe_m1_m2", "e:L2:c:R1"},
    {"oe_m1_m2", "e:L3:Lm1:Lm2"},
    {"oe_m1_m2", "e:L3:Lm3:Lm4"},
    {"oe_m1_m2", "e:L3:R-2:R-1"},
    {"oe_m1_m2", "e:Lm0:L-2:L-1"},
    {"oe_m1_m2", "e:Lm0:Lm2:Lm3"},
    {"oe_m1_m2", "e:Lm0:R3:Rm0"},
    {"oe_m1_m2", "e:Lm0:Rm2:Rm3"},
    {"oe_m1_m2", "e:Lm0:Rm5:Rm0"},
    {"oe_m1_m2", "e:Lm1:Lm1:Lm2"},
    {"oe_m1_m2", "e:Lm1:Lm4:Lm5"},
    {"oe_m1_m2", "e:Lm1:R-2:R-1"},
    {"oe_m1_m2", "e:Lm1:R2:R3"},
    {"oe_m1_m2", "e:Lm1:Rm4:Rm5"},
    {"oe_m1_m2", "e:Lm2:Lm1:Lm2"},
    {"oe_m1_m2", "e:Lm2:R1:R2"},
    {"oe_m1_m2", "e:Lm2:Rm0:Rm1"},
    {"oe_m1_m2", "e:Lm2:Rm2:Rm3"},
    {"oe_m1_m2", "e:Lm3:Lm3:Lm4"},
    {"oe_m1_m2", "e:Lm3:R-2:R-1"},
    {"oe_m1_m2", "e:Lm3:R2:R3"},
    {"oe_m1_m2", "e:Lm3:Rm0:R-3"},
    {"oe_m1_m2", "e:Lm3:Rm0:Rm1"},
    {"oe_m1_m2", "e:Lm4:L-1:c"},
    {"oe_m1_m2", "e:Lm4:R-3:R-2"},
    {"oe_m1_m2", "e:Lm4:Rm1:Rm2"},
    {"oe_m1_m2", "e:Lm5:Lm0:Lm1"},
    {"oe_m1_m2", "e:R-1:R-3:R-2"},
    {"oe_m1_m2", "e:R-1:Rm1:Rm2"},
    {"oe_m1_m2", "e:R-1:Rm4:Rm5"},
    {"oe_m1_m2", "e:R-2:R2:R3"},
    {"oe_m1_m2", "e:R-2:Rm0:R-3"},
    {"oe_m1_m2", "e:R-2:Rm3:Rm4"},
    {"oe_m1_m2", "e:R-3:R3:Rm0"},
    {"oe_m1_m2", "e:R-3:Rm2:Rm3"},
    {"oe_m1_m2", "e:R2:Rm2:Rm3"},
    {"oe_m1_m2", "e:R2:Rm5:Rm0"},
    {"oe_m1_m2", "e:R3:Rm0:Rm1"},
    {"oe_m1_m2", "e:Rm0:Rm1:Rm2"},
    {"oe_m1_m2", "e:Rm1:Rm2:Rm3"},
    {"oe_m1_m2", "e:Rm2:Rm3:Rm4"},
    {"oe_m1_m2", "e:Rm3:Rm4:Rm5"},
    {"oe_m1_m2", "e:Rm4:Rm5:Rm0"},
    {"oe_m1_m2", "e:Rm5:Rm0:Rm1"},
    {"oe_m1_m2", "n:Lm0:-2"},
    {"oe_m1_m2", "n:Lm0:-4"},
    {"oe_m1_m2", "n:Lm0:4"},
    {"oe_m1_m2", "n:Lm2:-3"},
    {"oe_m1_m4", "e:L-1:Lm4:Lm5"},
    {"oe_m1_m4", "e:L-1:R-2:R-1"},
    {"oe_m1_m4", "e:L-1:R3:Rm0"},
    {"oe_m1_m4", "e:L-1:Rm5:Rm0"},
    {"oe_m1_m4", "e:L-2:L3:Lm0"},
    {"oe_m1_m4", "e:L-2:Lm5:L-3"},
    {"oe_m1_m4", "e:L-2:Lm5:Lm0"},
    {"oe_m1_m4", "e:L-2:R-3:R-2"},
    {"oe_m1_m4", "e:L-2:R1:R2"},
    {"oe_m1_m4", "e:L-2:Rm1:Rm2"},
    {"oe_m1_m4", "e:L-2:Rm4:Rm5"},
    {"oe_m1_m4", "e:L-2:c:L1"},
    {"oe_m1_m4", "e:L-3:L1:L2"},
    {"oe_m1_m4", "e:L-3:Lm0:Lm1"},
    {"oe_m1_m4", "e:L-3:Lm3:Lm4"},
    {"oe_m1_m4", "e:L-3:Rm1:Rm2"},
    {"oe_m1_m4", "e:L-3:Rm4:Rm5"},
    {"oe_m1_m4", "e:L1:Lm0:Lm1"},
    {"oe_m1_m4", "e:L1:R-1:c"},
    {"oe_m1_m4", "e:L1:Rm3:Rm4"},
    {"oe_m1_m4", "e:L2:L3:Lm0"},
    {"oe_m1_m4", "e:L2:Lm2:Lm3"},
    {"oe_m1_m4", "e:L2:Lm5:Lm0"},
    {"oe_m1_m4", "e:L2:R1:R2"},
    {"oe_m1_m4", "e:L2:R3:Rm0"},
    {"oe_m1_m4", "e:L2:Rm2:R-3"},
    {"oe_m1_m4", "e:L2:Rm2:Rm3"},
    {"oe_m1_m4", "e:L2:Rm5:Rm0"},
    {"oe_m1_m4", "e:L3:Lm0:Lm1"},
    {"oe_m1_m4", "e:Lm0:Lm0:Lm1"},
    {"oe_m1_m4", "e:Lm0:Lm3:Lm4"},
    {"oe_m1_m4", "e:Lm0:R-1:c"},
    {"oe_m1_m4", "e:Lm0:R2:R3"},
    {"oe_m1_m4", "e:Lm1:Lm2:Lm3"},
    {"oe_m1_m4", "e:Lm1:R2:R3"},
    {"oe_m1_m4", "e:Lm1:Rm1:Rm2"},
    {"oe_m1_m4", "e:Lm1:Rm4:Rm5"},
    {"oe_m1_m4", "e:Lm1:c:R1"},
    {"oe_m1_m4", "e:Lm2:L-1:c"},
    {"oe_m1_m4", "e:Lm2:R-1:c"},
    {"oe_m1_m4", "e:Lm2:R2:R3"},
    {"oe_m1_m4", "e:Lm2:Rm1:Rm2"},
    {"oe_m1_m4", "e:Lm2:Rm4:Rm5"},
    {"oe_m1_m4", "e:Lm2:c:R1"},
    {"oe_m1_m4", "e:Lm3:L1:L2"},
    {"oe_m1_m4", "e:Lm3:Lm3:Lm4"},
    {"oe_m1_m4", "e:Lm3:R-1:c"},
    {"oe_m1_m4", "e:Lm4:Lm5:Lm0"},
    {"oe_m1_m4", "e:Lm4:R-2:R-1"},
    {"oe_m1_m4", "e:Lm4:R3:Rm0"},
    {"oe_m1_m4", "e:Lm4:Rm2:R-3"},
    {"oe_m1_m4", "e:Lm4:Rm2:Rm3"},
    {"oe_m1_m4", "e:Lm4:Rm5:Rm0"},
    {"oe_m1_m4", "e:R-1:Rm0:Rm1"},
    {"oe_m1_m4", "e:R-1:Rm2:Rm3"},
    {"oe_m1_m4", "e:R-2:Lm1:Lm2"},
    {"oe_m1_m4", "e:R-2:R1:R2"},
    {"oe_m1_m4", "e:R-2:Rm5:Rm0"},
    {"oe_m1_m4", "e:R-3:Rm0:Rm1"},
    {"oe_m1_m4", "e:R-3:c:R1"},
    {"oe_m1_m4", "e:R1:Rm2:Rm3"},
    {"oe_m1_m4", "e:R2:Rm0:Rm1"},
    {"oe_m1_m4", "e:R3:L-1:c"},
    {"oe_m1_m4", "e:R3:Rm0:Rm1"},
    {"oe_m1_m4", "e:Rm0:L2:L3"},
    {"oe_m1_m4", "e:Rm0:Lm4:Lm5"},
    {"oe_m1_m4", "e:Rm0:R-1:c"},
    {"oe_m1_m4", "e:Rm0:R2:R3"},
    {"oe_m1_m4", "e:Rm0:Rm1:Rm2"},
    {"oe_m1_m4", "e:Rm0:Rm4:Rm5"},
    {"oe_m1_m4", "e:Rm1:Lm1:Lm2"},
    {"oe_m1_m4", "e:Rm1:R-2:R-1"},
    {"oe_m1_m4", "e:Rm1:R1:R2"},
    {"oe_m1_m4", "e:Rm1:Rm2:Rm3"},
    {"oe_m1_m4", "e:Rm1:Rm5:Rm0"},
    {"oe_m1_m4", "e:Rm2:L2:L3"},
    {"oe_m1_m4", "e:Rm2:Lm4:Lm5"},
    {"oe_m1_m4", "e:Rm2:Rm0:Rm1"},
    {"oe_m1_m4", "e:Rm2:Rm3:Rm4"},
    {"oe_m1_m4", "e:Rm3:Rm4:Rm5"},
    {"oe_m1_m4", "n:Lm0:-3"},
    {"oe_m1_m4", "n:Lm0:1"},
    {"oe_m3_4", "e:L-1:R3:c"},
    {"oe_m3_4", "e:L-1:c:L1"},
    {"oe_m3_4", "e:L-1:c:R1"},
    {"oe_m3_4", "e:L-2:Lm1:L-3"},
    {"oe_m3_4", "e:L-2:Lm1:Lm2"},
    {"oe_m3_4", "e:L-2:Lm3:Lm4"},
    {"oe_m3_4", "e:L1:L2:L3"},
    {"oe_m3_4", "e:L1:Lm4:Lm5"},
    {"oe_m3_4", "e:L2:L-2:L-1"},
    {"oe_m3_4", "e:L2:Lm3:Lm4"},
    {"oe_m3_4", "e:L2:Lm5:Lm0"},
    {"oe_m3_4", "e:L2:R3:c"},
    {"oe_m3_4", "e:L3:Lm2:Lm3"},
    {"oe_m3_4", "e:Lm0:L-2:L-1"},
    {"oe_m3_4", "e:Lm0:Lm1:Lm2"},
    {"oe_m3_4", "e:Lm0:Lm3:Lm4"},
    {"oe_m3_4", "e:Lm0:R2:R3"},
    {"oe_m3_4", "e:Lm1:L-1:c"},
    {"oe_m3_4", "e:Lm1:L3:Lm0"},
    {"oe_m3_4", "e:Lm1:R1:R2"},
    {"oe_m3_4", "e:Lm1:c:L1"},
    {"oe_m3_4", "e:Lm2:Lm2:Lm3"},
    {"oe_m3_4", "e:Lm2:Lm5:Lm0"},
    {"oe_m3_4", "e:Lm3:L-1:c"},
    {"oe_m3_4", "e:Lm3:Lm2:Lm3"},
    {"oe_m3_4", "e:Lm4:R1:R2"},
    {"oe_m3_4", "e:Lm5:Lm4:Lm5"},
    {"oe_m3_4", "e:R1:R3:c"},
    {"oe_m3_4", "n:Lm0:1"},
    {"oe_m3_4", "n:Lm0:3"},
    {"oe_m3_4", "n:Lm1:-4"},
    {"oe_m3_4", "n:Lm1:4"},
    {"oe_m3_6", "e:L-1:L1:L2"},
    {"oe_m3_6", "e:L-1:Lm1:L-3"},
    {"oe_m3_6", "e:L-1:Lm3:Lm4"},
    {"oe_m3_6", "e:L-1:R3:R4"},
    {"oe_m3_6", "e:L-2:L3:Lm0"},
    {"oe_m3_6", "e:L-2:Lm2:Lm3"},
    {"oe_m3_6", "e:L-2:Lm5:Lm0"},
    {"oe_m3_6", "e:L-3:Lm3:Lm4"},
    {"oe_m3_6", "e:L-3:R4:R5"},
    {"oe_m3_6", "e:L1:L3:Lm0"},
    {"oe_m3_6", "e:L1:Lm3:Lm4"},
    {"oe_m3_6", "e:L2:Lm0:Lm1"},
    {"oe_m3_6", "e:L2:R1:R2"},
    {"oe_m3_6", "e:L3:L-1:c"},
    {"oe_m3_6", "e:Lm0:Lm0:Lm1"},
    {"oe_m3_6", "e:Lm0:Lm3:Lm4"},
    {"oe_m3_6", "e:Lm0:c:R1"},
    {"oe_m3_6", "e:Lm1:L2:L3"},
    {"oe_m3_6", "e:Lm1:Lm4:Lm5"},
    {"oe_m3_6", "e:Lm1:R2:R3"},
    {"oe_m3_6", "e:Lm1:R5:c"},
    {"oe_m3_6", "e:Lm2:Lm2:Lm3"},
    {"oe_m3_6", "e:Lm3:c:L1"},
    {"oe_m3_6", "e:Lm4:R2:R3"},
    {"oe_m3_6", "e:Lm5:R4:R5"},
    {"oe_m3_6", "e:R1:L-2:L-1"},
    {"oe_m3_6", "e:R1:R3:R4"},
    {"oe_m3_6", "e:R2:Lm0:Lm1"},
    {"oe_m3_6", "e:R4:Lm4:Lm5"},
    {"oe_m3_6", "n:Lm0:-3"},
    {"oe_m3_6", "n:Lm0:3"},
    {"oe_m3_6", "n:Lm1:-3"},
    {"oe_m3_6", "n:Lm1:3"},
    {"oe_m3_8", "e:L-1:L2:L3"},
    {"oe_m3_8", "e:L-1:Lm1:Lm2"},
    {"oe_m3_8", "e:L-1:Lm4:Lm5"},
    {"oe_m3_8", "e:L-1:R2:R3"},
    {"oe_m3_8", "e:L-2:Lm1:L-3"},
    {"oe_m3_8", "e:L-2:Lm1:Lm2"},
    {"oe_m3_8", "e:L-2:Lm4:Lm5"},
    {"oe_m3_8", "e:L-2:c:R1"},
    {"oe_m3_8", "e:L-3:L3:Lm0"},
    {"oe_m3_8", "e:L-3:Lm3:Lm4"},
    {"oe_m3_8", "e:L-3:R1:R2"},
    {"oe_m3_8", "e:L1:L-1:c"},
    {"oe_m3_8", "e:L1:L3:Lm0"},
    {"oe_m3_8", "e:L1:R4:R5"},
    {"oe_m3_8", "e:L1:R7:c"},
    {"oe_m3_8", "e:L1:c:R1"},
    {"oe_m3_8", "e:L2:L3:Lm0"},
    {"oe_m3_8", "e:L2:Lm2:Lm3"},
    {"oe_m3_8", "e:L2:Lm5:Lm0"},
    {"oe_m3_8", "e:L3:Lm0:Lm1"},
    {"oe_m3_8", "e:L3:R2:R3"},
    {"oe_m3_8", "e:L3:R5:R6"},
    {"oe_m3_8", "e:Lm0:L2:L3"},
    {"oe_m3_8", "e:Lm0:Lm1:Lm2"},
    {"oe_m3_8", "e:Lm0:Lm4:Lm5"},
    {"oe_m3_8", "e:Lm0:R5:R6"},
    {"oe_m3_8", "e:Lm0:R7:c"},
    {"oe_m3_8", "e:Lm1:Lm2:Lm3"},
    {"oe_m3_8", "e:Lm1:Lm5:Lm0"},
    {"oe_m3_8", "e:Lm1:R1:R2"},
    {"oe_m3_8", "e:Lm1:R5:R6"},
    {"oe_m3_8", "e:Lm2:Lm0:Lm1"},
    {"oe_m3_8", "e:Lm2:Lm3:Lm4"},
    {"oe_m3_8", "e:Lm2:R1:R2"},
    {"oe_m3_8", "e:Lm2:R5:R6"},
    {"oe_m3_8", "e:Lm3:Lm4:Lm5"},
    {"oe_m3_8", "e:Lm3:R5:R6"},
    {"oe_m3_8", "e:Lm3:c:R1"},
    {"oe_m3_8", "e:Lm4:R2:R3"},
    {"oe_m3_8", "e:Lm4:R7:c"},
    {"oe_m3_8", "e:Lm5:R2:R3"},
    {"oe_m3_8", "e:Lm5:R5:R6"},
    {"oe_m3_8", "e:R1:L-2:L-1"},
    {"oe_m3_8", "e:R1:R4:R5"},
    {"oe_m3_8", "e:R2:L2:L3"},
    {"oe_m3_8", "e:R2:R5:R6"},
    {"oe_m3_8", "e:R2:R7:c"},
    {"oe_m3_8", "e:R3:Lm1:L-3"},
    {"oe_m3_8", "e:R3:Lm1:Lm2"},
    {"oe_m3_m0", "e:L-1:L-3:L-2"},
    {"oe_m3_m0", "e:L-1:L2:L3"},
    {"oe_m3_m0", "e:L-1:Lm0:Lm1"},
    {"oe_m3_m0", "e:L-1:Lm4:Lm5"},
    {"oe_m3_m0", "e:L-1:Rm1:Rm2"},
    {"oe_m3_m0", "e:L-1:Rm4:R-3"},
    {"oe_m3_m0", "e:L-1:Rm4:Rm5"},
    {"oe_m3_m0", "e:L-2:L2:L3"},
    {"oe_m3_m0", "e:L-2:Lm0:Lm1"},
    {"oe_m3_m0", "e:L-2:R-1:c"},
    {"oe_m3_m0", "e:L-2:Rm4:R-3"},
    {"oe_m3_m0", "e:L-2:Rm4:Rm5"},
    {"oe_m3_m0", "e:L-2:c:L1"},
    {"oe_m3_m0", "e:L-3:L2:L3"},
    {"oe_m3_m0", "e:L-3:Lm0:Lm1"},
    {"oe_m3_m0", "e:L-3:R-1:c"},
    {"oe_m3_m0", "e:L-3:Rm0:Rm1"},
    {"oe_m3_m0", "e:L-3:c:R1"},
    {"oe_m3_m0", "e:L1:Lm0:Lm1"},
    {"oe_m3_m0", "e:L1:Lm2:Lm3"},
    {"oe_m3_m0", "e:L1:R3:Rm0"},
    {"oe_m3_m0", "e:L2:Lm1:Lm2"},
    {"oe_m3_m0", "e:L2:Lm4:Lm5"},
    {"oe_m3_m0", "e:L2:R-1:c"},
    {"oe_m3_m0", "e:L2:R2:R3"},
    {"oe_m3_m0", "e:L2:Rm0:Rm1"},
    {"oe_m3_m0", "e:L2:Rm2:Rm3"},
    {"oe_m3_m0", "e:L3:R2:R3"},
    {"oe_m3_m0", "e:L3:Rm1:Rm2"},
    {"oe_m3_m0", "e:L3:Rm4:Rm5"},
    {"oe_m3_m0", "e:Lm0:Lm0:Lm1"},
    {"oe_m3_m0", "e:Lm0:Lm3:Lm4"},
    {"oe_m3_m0", "e:Lm0:R-1:c"},
    {"oe_m3_m0", "e:Lm0:Rm1:Rm2"},
    {"oe_m3_m0", "e:Lm0:Rm4:R-3"},
    {"oe_m3_m0", "e:Lm0:Rm4:Rm5"},
    {"oe_m3_m0", "e:Lm1:L2:L3"},
    {"oe_m3_m0", "e:Lm1:Lm4:Lm5"},
    {"oe_m3_m0", "e:Lm1:R-1:c"},
    {"oe_m3_m0", "e:Lm1:R-3:R-2"},
    {"oe_m3_m0", "e:Lm1:R2:R3"},
    {"oe_m3_m0", "e:Lm1:Rm0:Rm1"},
    {"oe_m3_m0", "e:Lm1:Rm3:Rm4"},
    {"oe_m3_m0", "e:Lm2:L-3:L-2"},
    {"oe_m3_m0", "e:Lm2:Lm2:Lm3"},
    {"oe_m3_m0", "e:Lm2:R-1:c"},
    {"oe_m3_m0", "e:Lm2:R3:Rm0"},
    {"oe_m3_m0", "e:Lm2:Rm1:Rm2"},
    {"oe_m3_m0", "e:Lm2:c:R1"},
    {"oe_m3_m0", "e:Lm3:R2:R3"},
    {"oe_m3_m0", "e:Lm4:R-3:R-2"},
    {"oe_m3_m0", "e:Lm5:Rm0:Rm1"},
    {"oe_m3_m0", "e:R-1:L1:L2"},
    {"oe_m3_m0", "e:R-1:R-3:R-2"},
    {"oe_m3_m0", "e:R-1:Rm0:Rm1"},
    {"oe_m3_m0", "e:R-1:Rm3:Rm4"},
    {"oe_m3_m0", "e:R-2:R3:Rm0"},
    {"oe_m3_m0", "e:R-2:Rm3:Rm4"},
    {"oe_m3_m0", "e:R-2:Rm5:Rm0"},
    {"oe_m3_m0", "e:R-2:c:L1"},
    {"oe_m3_m0", "e:R-2:c:R1"},
    {"oe_m3_m0", "e:R-3:R3:Rm0"},
    {"oe_m3_m0", "e:R1:R3:Rm0"},
    {"oe_m3_m0", "e:R1:Rm2:Rm3"},
    {"oe_m3_m0", "e:R1:Rm5:Rm0"},
    {"oe_m3_m0", "e:R2:R3:Rm0"},
    {"oe_m3_m0", "e:R2:Rm1:Rm2"},
    {"oe_m3_m0", "e:R3:Lm1:L-3"},
    {"oe_m3_m0", "e:Rm0:Rm0:Rm1"},
    {"oe_m3_m0", "e:Rm0:Rm3:Rm4"},
    {"oe_m3_m0", "e:Rm1:Rm4:R-3"},
    {"oe_m3_m0", "e:Rm1:Rm4:Rm5"},
    {"oe_m3_m0", "e:Rm2:Rm2:Rm3"},
    {"oe_m3_m0", "n:Lm0:-3"},
    {"oe_m3_m0", "n:Lm0:3"},
    {"oe_m3_m0", "n:Lm1:-3"},
    {"oe_m3_m0", "n:Lm1:3"},
    {"oe_m3_m0", "n:Rm0:-3"},
    {"oe_m3_m0", "n:Rm0:3"},
    {"oe_m3_m0", "n:Rm1:-3"},
    {"oe_m3_m0", "n:Rm1:3"},
    {"oe_m3_m2", "e:L-1:L-3:L-2"},
    {"oe_m3_m2", "e:L-1:Lm3:Lm4"},
    {"oe_m3_m2", "e:L-1:R-3:R-2"},
    {"oe_m3_m2", "e:L-1:Rm1:Rm2"},
    {"oe_m3_m2", "e:L-1:c:L1"},
    {"oe_m3_m2", "e:L-1:c:R1"},
    {"oe_m3_m2", "e:L-2:L1:L2"},
    {"oe_m3_m2", "e:L-2:Lm1:L-3"},
    {"oe_m3_m2", "e:L-2:Lm1:Lm2"},
    {"oe_m3_m2", "e:L-2:Lm4:Lm5"},
    {"oe_m3_m2", "e:L-2:R-3:R-2"},
    {"oe_m3_m2", "e:L-2:Rm1:Rm2"},
    {"oe_m3_m2", "e:L-2:Rm3:Rm4"},
    {"oe_m3_m2", "e:L-3:L3:Lm0"},
    {"oe_m3_m2", "e:L-3:Lm2:Lm3"},
    {"oe_m3_m2", "e:L-3:Lm5:Lm0"},
    {"oe_m3_m2", "e:L-3:R-2:R-1"},
    {"oe_m3_m2", "e:L-3:Rm2:Rm3"},
    {"oe_m3_m2", "e:L-3:Rm5:Rm0"},
    {"oe_m3_m2", "e:L1:L2:L3"},
    {"oe_m3_m2", "e:L1:Lm2:Lm3"},
    {"oe_m3_m2", "e:L1:Lm4:Lm5"},
    {"oe_m3_m2", "e:L1:R-1:c"},
    {"oe_m3_m2", "e:L1:Rm0:R-3"},
    {"oe_m3_m2", "e:L1:Rm0:Rm1"},
    {"oe_m3_m2", "e:L1:Rm2:Rm3"},
    {"oe_m3_m2", "e:L1:c:R1"},
    {"oe_m3_m2", "e:L2:Lm0:Lm1"},
    {"oe_m3_m2", "e:L2:Lm4:Lm5"},
    {"oe_m3_m2", "e:L2:R-1:c"},
    {"oe_m3_m2", "e:L2:Rm0:R-3"},
    {"oe_m3_m2", "e:L2:Rm0:Rm1"},
    {"oe_m3_m2", "e:L2:Rm3:Rm4"},
    {"oe_m3_m2", "e:L3:L-1:c"},
    {"oe_m3_m2", "e:L3:Lm1:L-3"},
    {"oe_m3_m2", "e:L3:Lm1:Lm2"},
    {"oe_m3_m2", "e:L3:Rm0:R-3"},
    {"oe_m3_m2", "e:L3:Rm0:Rm1"},
    {"oe_m3_m2", "e:L3:c:R1"},
    {"oe_m3_m2", "e:Lm0:L1:L2"},
    {"oe_m3_m2", "e:Lm0:Lm1:Lm2"},
    {"oe_m3_m2", "e:Lm0:R-3:R-2"},
    {"oe_m3_m2", "e:Lm0:R2:R3"},
    {"oe_m3_m2", "e:Lm0:c:R1"},
    {"oe_m3_m2", "e:Lm1:R3:Rm0"},
    {"oe_m3_m2", "e:Lm1:Rm2:Rm3"},
    {"oe_m3_m2", "e:Lm1:Rm5:Rm0"},
    {"oe_m3_m2", "e:Lm2:L2:L3"},
    {"oe_m3_m2", "e:Lm2:R-1:c"},
    {"oe_m3_m2", "e:Lm2:R-3:R-2"},
    {"oe_m3_m2", "e:Lm2:R3:Rm0"},
    {"oe_m3_m2", "e:Lm2:Rm2:Rm3"},
    {"oe_m3_m2", "e:Lm2:c:R1"},
    {"oe_m3_m2", "e:Lm3:L2:L3"},
    {"oe_m3_m2", "e:Lm3:R2:R3"},
    {"oe_m3_m2", "e:Lm4:Rm1:Rm2"},
    {"oe_m3_m2", "e:Lm4:Rm4:Rm5"},
    {"oe_m3_m2", "e:Lm5:Rm1:Rm2"},
    {"oe_m3_m2", "e:Lm5:Rm4:Rm5"},
    {"oe_m3_m2", "e:R-1:L-1:c"},
    {"oe_m3_m2", "e:R-1:L2:L3"},
    {"oe_m3_m2", "e:R-1:Rm1:Rm2"},
    {"oe_m3_m2", "e:R-1:c:R1"},
    {"oe_m3_m2", "e:R-2:Lm5:Lm0"},
    {"oe_m3_m2", "e:R-2:R3:Rm0"},
    {"oe_m3_m2", "e:R-2:Rm3:Rm4"},
    {"oe_m3_m2", "e:R-3:R2:R3"},
    {"oe_m3_m2", "e:R-3:Rm2:Rm3"},
    {"oe_m3_m2", "e:R1:Rm0:Rm1"},
    {"oe_m3_m2", "e:R1:Rm2:Rm3"},
    {"oe_m3_m2", "e:R2:Rm0:Rm1"},
    {"oe_m3_m2", "e:R2:Rm3:Rm4"},
    {"oe_m3_m2", "e:R3:Rm0:Rm1"},
    {"oe_m3_m2", "e:Rm0:L-2:L-1"},
    {"oe_m3_m2", "e:Rm0:Lm1:Lm2"},
    {"oe_m3_m2", "e:Rm0:R-2:R-1"},
    {"oe_m3_m2", "e:Rm0:Rm1:Rm2"},
    {"oe_m3_m2", "e:Rm0:Rm4:Rm5"},
    {"oe_m3_m2", "e:Rm1:Rm2:Rm3"},
    {"oe_m3_m2", "e:Rm1:Rm5:Rm0"},
    {"oe_m3_m2", "e:Rm2:Lm1:Lm2"},
    {"oe_m3_m2", "e:Rm2:Rm0:Rm1"},
    {"oe_m3_m2", "e:Rm2:Rm3:Rm4"},
    {"oe_m3_m2", "e:Rm3:Rm4:Rm5"},
    {"oe_m3_m2", "e:Rm4:R-1:c"},
    {"oe_m3_m4", "e:L-1:L2:L3"},
    {"oe_m3_m4", "e:L-1:Lm2:Lm3"},
    {"oe_m3_m4", "e:L-1:Rm1:Rm2"},
    {"oe_m3_m4", "e:L-2:Lm0:Lm1"},
    {"oe_m3_m4", "e:L-2:Lm3:Lm4"},
    {"oe_m3_m4", "e:L-2:Rm1:Rm2"},
    {"oe_m3_m4", "e:L-2:Rm3:Rm4"},
    {"oe_m3_m4", "e:L-2:c:R1"},
    {"oe_m3_m4", "e:L-3:Lm3:Lm4"},
    {"oe_m3_m4", "e:L-3:R2:R3"},
    {"oe_m3_m4", "e:L-3:Rm0:Rm1"},
    {"oe_m3_m4", "e:L-3:Rm4:Rm5"},
    {"oe_m3_m4", "e:L1:L-2:L-1"},
    {"oe_m3_m4", "e:L1:L2:L3"},
    {"oe_m3_m4", "e:L1:Lm4:Lm5"},
    {"oe_m3_m4", "e:L1:R2:R3"},
    {"oe_m3_m4", "e:L2:Lm2:Lm3"},
    {"oe_m3_m4", "e:L2:Lm4:Lm5"},
    {"oe_m3_m4", "e:L2:Rm2:R-3"},
    {"oe_m3_m4", "e:L2:Rm2:Rm3"},
    {"oe_m3_m4", "e:L2:Rm4:Rm5"},
    {"oe_m3_m4", "e:L2:c:R1"},
    {"oe_m3_m4", "e:L3:Lm1:Lm2"},
    {"oe_m3_m4", "e:L3:R-2:R-1"},
    {"oe_m3_m4", "e:L3:Rm3:Rm4"},
    {"oe_m3_m4", "e:Lm0:L-2:L-1"},
    {"oe_m3_m4", "e:Lm0:Lm1:Lm2"},
    {"oe_m3_m4", "e:Lm0:Lm4:Lm5"},
    {"oe_m3_m4", "e:Lm0:R-2:R-1"},
    {"oe_m3_m4", "e:Lm0:R3:Rm0"},
    {"oe_m3_m4", "e:Lm0:Rm1:Rm2"},
    {"oe_m3_m4", "e:Lm0:Rm3:Rm4"},
    {"oe_m3_m4", "e:Lm0:Rm5:Rm0"},
    {"oe_m3_m4", "e:Lm1:Lm2:Lm3"},
    {"oe_m3_m4", "e:Lm1:Lm5:Lm0"},
    {"oe_m3_m4", "e:Lm1:R-2:R-1"},
    {"oe_m3_m4", "e:Lm1:Rm1:Rm2"},
    {"oe_m3_m4", "e:Lm1:Rm5:Rm0"},
    {"oe_m3_m4", "e:Lm2:Lm0:Lm1"},
    {"oe_m3_m4", "e:Lm2:Lm3:Lm4"},
    {"oe_m3_m4", "e:Lm2:R2:R3"},
    {"oe_m3_m4", "e:Lm2:Rm0:Rm1"},
    {"oe_m3_m4", "e:Lm2:Rm4:Rm5"},
    {"oe_m3_m4", "e:Lm3:Lm4:Lm5"},
    {"oe_m3_m4", "e:Lm3:R-2:R-1"},
    {"oe_m3_m4", "e:Lm3:Rm5:Rm0"},
    {"oe_m3_m4", "e:Lm4:R3:Rm0"},
    {"oe_m3_m4", "e:Lm4:Rm2:R-3"},
    {"oe_m3_m4", "e:Lm4:Rm2:Rm3"},
    {"oe_m3_m4", "e:Lm5:Rm3:Rm4"},
    {"oe_m3_m4", "e:R-1:R-3:R-2"},
    {"oe_m3_m4", "e:R-1:R1:R2"},
    {"oe_m3_m4", "e:R-2:R2:R3"},
    {"oe_m3_m4", "e:R-2:Rm1:Rm2"},
    {"oe_m3_m4", "e:R-3:L1:L2"},
    {"oe_m3_m4", "e:R-3:Rm4:Rm5"},
    {"oe_m3_m4", "e:R1:R2:R3"},
    {"oe_m3_m4", "e:R2:Rm2:Rm3"},
    {"oe_m3_m4", "e:R3:Rm1:Rm2"},
    {"oe_m3_m4", "e:Rm0:L-2:L-1"},
    {"oe_m3_m4", "e:Rm0:R1:R2"},
    {"oe_m3_m4", "e:Rm0:Rm1:Rm2"},
    {"oe_m3_m4", "e:Rm0:Rm4:Rm5"},
    {"oe_m3_m4", "e:Rm1:Rm2:Rm3"},
    {"oe_m3_m4", "e:Rm1:Rm5:Rm0"},
    {"oe_m3_m4", "e:Rm2:L-2:L-1"},
    {"oe_m3_m4", "e:Rm2:Rm0:Rm1"},
    {"oe_m3_m4", "e:Rm2:Rm3:Rm4"},
    {"oe_m3_m4", "e:Rm3:Rm4:Rm5"},
    {"oe_m5_4", "e:L-1:Lm0:Lm1"},
    {"oe_m5_4", "e:L-1:Lm3:L-3"},
    {"oe_m5_4", "e:L-1:Lm3:Lm4"},
    {"oe_m5_4", "e:L-2:Lm3:L-3"},
    {"oe_m5_4", "e:L-2:Lm3:Lm4"},
    {"oe_m5_4", "e:L-2:R3:c"},
    {"oe_m5_4", "e:L-3:Lm2:Lm3"},
    {"oe_m5_4", "e:L-3:R1:R2"},
    {"oe_m5_4", "e:L1:L3:Lm0"},
    {"oe_m5_4", "e:L1:Lm2:Lm3"},
    {"oe_m5_4", "e:L1:Lm5:Lm0"},
    {"oe_m5_4", "e:L1:R1:R2"},
    {"oe_m5_4", "e:L2:Lm0:Lm1"},
    {"oe_m5_4", "e:L3:Lm3:Lm4"},
    {"oe_m5_4", "e:Lm0:Lm2:Lm3"},
    {"oe_m5_4", "e:Lm0:R3:c"},
    {"oe_m5_4", "e:Lm0:c:R1"},
    {"oe_m5_4", "e:Lm1:Lm0:Lm1"},
    {"oe_m5_4", "e:Lm1:Lm3:L-3"},
    {"oe_m5_4", "e:Lm1:Lm3:Lm4"},
    {"oe_m5_4", "e:Lm1:R1:R2"},
    {"oe_m5_4", "e:Lm3:R2:R3"},
    {"oe_m5_4", "e:Lm4:Lm4:Lm5"},
    {"oe_m5_4", "e:Lm4:R2:R3"},
    {"oe_m5_4", "e:R1:R2:R3"},
    {"oe_m5_4", "n:Lm0:-4"},
    {"oe_m5_4", "n:Lm0:2"},
    {"oe_m5_4", "n:Lm1:-4"},
    {"oe_m5_4", "n:Lm1:2"},
    {"oe_m5_6", "e:L-1:Lm1:Lm2"},
    {"oe_m5_6", "e:L-1:Lm3:L-3"},
    {"oe_m5_6", "e:L-1:R3:R4"},
    {"oe_m5_6", "e:L-1:c:L1"},
    {"oe_m5_6", "e:L-1:c:R1"},
    {"oe_m5_6", "e:L-2:Lm0:Lm1"},
    {"oe_m5_6", "e:L-2:Lm3:L-3"},
    {"oe_m5_6", "e:L-2:Lm3:Lm4"},
    {"oe_m5_6", "e:L-2:R2:R3"},
    {"oe_m5_6", "e:L-3:L3:Lm0"},
    {"oe_m5_6", "e:L-3:Lm2:Lm3"},
    {"oe_m5_6", "e:L-3:Lm5:Lm0"},
    {"oe_m5_6", "e:L1:Lm2:Lm3"},
    {"oe_m5_6", "e:L1:R3:R4"},
    {"oe_m5_6", "e:L1:R5:c"},
    {"oe_m5_6", "e:L1:c:R1"},
    {"oe_m5_6", "e:L2:Lm4:Lm5"},
    {"oe_m5_6", "e:L3:Lm1:Lm2"},
    {"oe_m5_6", "e:Lm0:L-1:c"},
    {"oe_m5_6", "e:Lm0:Lm1:Lm2"},
    {"oe_m5_6", "e:Lm0:Lm4:Lm5"},
    {"oe_m5_6", "e:Lm0:R4:R5"},
    {"oe_m5_6", "e:Lm1:L1:L2"},
    {"oe_m5_6", "e:Lm1:Lm2:Lm3"},
    {"oe_m5_6", "e:Lm1:Lm5:Lm0"},
    {"oe_m5_6", "e:Lm2:Lm0:Lm1"},
    {"oe_m5_6", "e:Lm2:Lm3:Lm4"},
    {"oe_m5_6", "e:Lm2:R3:R4"},
    {"oe_m5_6", "e:Lm2:c:R1"},
    {"oe_m5_6", "e:Lm3:Lm4:Lm5"},
    {"oe_m5_6", "e:Lm3:R5:c"},
    {"oe_m5_6", "e:R1:L2:L3"},
    {"oe_m5_6", "e:R1:R5:c"},
    {"oe_m5_6", "e:R2:L3:Lm0"},
    {"oe_m5_6", "e:R3:Lm2:Lm3"},
    {"oe_m5_6", "e:R3:Lm5:Lm0"},
    {"oe_m5_6", "e:R5:L-1:c"},
    {"oe_m5_8", "e:L-1:L2:L3"},
    {"oe_m5_8", "e:L-1:Lm0:Lm1"},
    {"oe_m5_8", "e:L-1:R3:R4"},
    {"oe_m5_8", "e:L-1:c:R1"},
    {"oe_m5_8", "e:L-2:L3:Lm0"},
    {"oe_m5_8", "e:L-2:Lm2:Lm3"},
    {"oe_m5_8", "e:L-2:Lm5:Lm0"},
    {"oe_m5_8", "e:L-2:R7:c"},
    {"oe_m5_8", "e:L-3:L2:L3"},
    {"oe_m5_8", "e:L-3:Lm0:Lm1"},
    {"oe_m5_8", "e:L-3:R4:R5"},
    {"oe_m5_8", "e:L1:L3:Lm0"},
    {"oe_m5_8", "e:L1:Lm2:Lm3"},
    {"oe_m5_8", "e:L1:Lm5:Lm0"},
    {"oe_m5_8", "e:L2:Lm4:Lm5"},
    {"oe_m5_8", "e:L2:R4:R5"},
    {"oe_m5_8", "e:L2:R7:c"},
    {"oe_m5_8", "e:L3:Lm0:Lm1"},
    {"oe_m5_8", "e:L3:R4:R5"},
    {"oe_m5_8", "e:Lm0:Lm2:Lm3"},
    {"oe_m5_8", "e:Lm0:R2:R3"},
    {"oe_m5_8", "e:Lm0:R4:R5"},
    {"oe_m5_8", "e:Lm0:R7:c"},
    {"oe_m5_8", "e:Lm1:Lm0:Lm1"},
    {"oe_m5_8", "e:Lm1:Lm3:Lm4"},
    {"oe_m5_8", "e:Lm1:R5:R6"},
    {"oe_m5_8", "e:Lm2:R7:c"},
    {"oe_m5_8", "e:Lm2:c:L1"},
    {"oe_m5_8", "e:Lm3:R3:R4"},
    {"oe_m5_8", "e:Lm3:R5:R6"},
    {"oe_m5_8", "e:Lm4:Lm4:Lm5"},
    {"oe_m5_8", "e:Lm5:L-2:L-1"},
    {"oe_m5_8", "e:Lm5:R4:R5"},
    {"oe_m5_8", "e:R1:L-2:L-1"},
    {"oe_m5_8", "e:R1:Lm2:Lm3"},
    {"oe_m5_8", "e:R1:R4:R5"},
    {"oe_m5_8", "e:R2:L1:L2"},
    {"oe_m5_8", "e:R2:Lm0:Lm1"},
    {"oe_m5_8", "e:R2:Lm3:L-3"},
    {"oe_m5_8", "e:R2:Lm3:Lm4"},
    {"oe_m5_8", "e:R2:R4:R5"},
    {"oe_m5_8", "n:Lm0:-4"},
    {"oe_m5_8", "n:Lm0:2"},
    {"oe_m5_8", "n:Lm1:-4"},
    {"oe_m5_8", "n:Lm1:2"},
    {"oe_m5_m0", "e:L-1:L2:L3"},
    {"oe_m5_m0", "e:L-1:Lm2:Lm3"},
    {"oe_m5_m0", "e:L-1:R-1:c"},
    {"oe_m5_m0", "e:L-1:R2:R3"},
    {"oe_m5_m0", "e:L-1:Rm2:Rm3"},
    {"oe_m5_m0", "e:L-1:Rm4:R-3"},
    {"oe_m5_m0", "e:L-2:L2:L3"},
    {"oe_m5_m0", "e:L-2:Lm1:Lm2"},
    {"oe_m5_m0", "e:L-2:R-2:R-1"},
    {"oe_m5_m0", "e:L-2:Rm1:Rm2"},
    {"oe_m5_m0", "e:L-2:c:L1"},
    {"oe_m5_m0", "e:L-3:Lm2:Lm3"},
    {"oe_m5_m0", "e:L-3:R-2:R-1"},
    {"oe_m5_m0", "e:L-3:Rm3:Rm4"},
    {"oe_m5_m0", "e:L1:L2:L3"},
    {"oe_m5_m0", "e:L1:Lm4:Lm5"},
    {"oe_m5_m0", "e:L1:Rm2:Rm3"},
    {"oe_m5_m0", "e:L2:L3:Lm0"},
    {"oe_m5_m0", "e:L2:Lm2:Lm3"},
    {"oe_m5_m0", "e:L2:R-3:R-2"},
    {"oe_m5_m0", "e:L2:R2:R3"},
    {"oe_m5_m0", "e:L2:Rm3:Rm4"},
    {"oe_m5_m0", "e:L3:Lm2:Lm3"},
    {"oe_m5_m0", "e:L3:R2:R3"},
    {"oe_m5_m0", "e:L3:Rm2:Rm3"},
    {"oe_m5_m0", "e:Lm0:L1:L2"},
    {"oe_m5_m0", "e:Lm0:Lm0:Lm1"},
    {"oe_m5_m0", "e:Lm0:Lm3:L-3"},
    {"oe_m5_m0", "e:Lm0:Lm3:Lm4"},
    {"oe_m5_m0", "e:Lm0:R-1:c"},
    {"oe_m5_m0", "e:Lm0:Rm1:Rm2"},
    {"oe_m5_m0", "e:Lm0:Rm5:Rm0"},
    {"oe_m5_m0", "e:Lm1:L-1:c"},
    {"oe_m5_m0", "e:Lm1:Lm4:Lm5"},
    {"oe_m5_m0", "e:Lm1:R-2:R-1"},
    {"oe_m5_m0", "e:Lm1:Rm1:Rm2"},
    {"oe_m5_m0", "e:Lm1:Rm4:Rm5"},
    {"oe_m5_m0", "e:Lm1:c:R1"},
    {"oe_m5_m0", "e:Lm2:Lm2:Lm3"},
    {"oe_m5_m0", "e:Lm2:Rm3:Rm4"},
    {"oe_m5_m0", "e:Lm2:c:R1"},
    {"oe_m5_m0", "e:Lm3:R3:Rm0"},
    {"oe_m5_m0", "e:Lm3:Rm2:Rm3"},
    {"oe_m5_m0", "e:Lm3:Rm5:Rm0"},
    {"oe_m5_m0", "e:Lm3:c:R1"},
    {"oe_m5_m0", "e:Lm4:R-1:c"},
    {"oe_m5_m0", "e:Lm4:R3:Rm0"},
    {"oe_m5_m0", "e:Lm4:Rm2:Rm3"},
    {"oe_m5_m0", "e:Lm4:Rm5:Rm0"},
    {"oe_m5_m0", "e:Lm4:c:R1"},
    {"oe_m5_m0", "e:Lm5:R-1:c"},
    {"oe_m5_m0", "e:R-1:R2:R3"},
    {"oe_m5_m0", "e:R-1:Rm0:Rm1"},
    {"oe_m5_m0", "e:R-1:Rm2:Rm3"},
    {"oe_m5_m0", "e:R-1:Rm4:R-3"},
    {"oe_m5_m0", "e:R-2:Lm4:Lm5"},
    {"oe_m5_m0", "e:R-2:R2:R3"},
    {"oe_m5_m0", "e:R-2:Rm2:Rm3"},
    {"oe_m5_m0", "e:R-2:Rm4:Rm5"},
    {"oe_m5_m0", "e:R-3:Lm1:Lm2"},
    {"oe_m5_m0", "e:R-3:R1:R2"},
    {"oe_m5_m0", "e:R-3:R3:Rm0"},
    {"oe_m5_m0", "e:R-3:Rm3:Rm4"},
    {"oe_m5_m0", "e:R-3:Rm5:Rm0"},
    {"oe_m5_m0", "e:R1:L-1:c"},
    {"oe_m5_m0", "e:R1:Rm2:Rm3"},
    {"oe_m5_m0", "e:R1:Rm4:Rm5"},
    {"oe_m5_m0", "e:R2:Lm0:Lm1"},
    {"oe_m5_m0", "e:R2:Rm2:Rm3"},
    {"oe_m5_m0", "e:R2:Rm4:Rm5"},
    {"oe_m5_m0", "e:R3:L-1:c"},
    {"oe_m5_m0", "e:R3:Rm3:Rm4"},
    {"oe_m5_m0", "e:Rm0:Lm3:L-3"},
    {"oe_m5_m0", "e:Rm0:Rm1:Rm2"},
    {"oe_m5_m0", "e:Rm0:Rm4:Rm5"},
    {"oe_m5_m0", "e:Rm0:c:L1"},
    {"oe_m5_m0", "e:Rm0:c:R1"},
    {"oe_m5_m0", "e:Rm1:Rm2:Rm3"},
    {"oe_m5_m0", "e:Rm1:Rm5:Rm0"},
    {"oe_m5_m0", "e:Rm1:c:R1"},
    {"oe_m5_m0", "e:Rm2:L-1:c"},
    {"oe_m5_m0", "e:Rm2:R2:R3"},
    {"oe_m5_m0", "e:Rm2:Rm0:Rm1"},
    {"oe_m5_m0", "e:Rm2:Rm3:Rm4"},
    {"oe_m5_m0", "e:Rm3:Rm4:Rm5"},
    {"oe_m5_m0", "n:Lm0:-3"},
    {"oe_m5_m0", "n:Lm0:3"},
    {"oe_m5_m0", "n:Lm1:-3"},
    {"oe_m5_m0", "n:Lm1:3"},
    {"oe_m5_m2", "e:L-1:Lm3:Lm4"},
    {"oe_m5_m2", "e:L-1:R2:R3"},
    {"oe_m5_m2", "e:L-1:Rm1:Rm2"},
    {"oe_m5_m2", "e:L-2:Lm0:Lm1"},
    {"oe_m5_m2", "e:L-2:R-1:c"},
    {"oe_m5_m2", "e:L-2:R-3:R-2"},
    {"oe_m5_m2", "e:L-2:R3:Rm0"},
    {"oe_m5_m2", "e:L-2:Rm1:Rm2"},
    {"oe_m5_m2", "e:L-2:c:R1"},
    {"oe_m5_m2", "e:L-3:L3:Lm0"},
    {"oe_m5_m2", "e:L-3:Lm5:Lm0"},
    {"oe_m5_m2", "e:L-3:R-2:R-1"},
    {"oe_m5_m2", "e:L-3:R3:Rm0"},
    {"oe_m5_m2", "e:L-3:Rm2:Rm3"},
    {"oe_m5_m2", "e:L-3:Rm5:Rm0"},
    {"oe_m5_m2", "e:L1:L3:Lm0"},
    {"oe_m5_m2", "e:L1:Lm2:Lm3"},
    {"oe_m5_m2", "e:L1:Lm5:Lm0"},
    {"oe_m5_m2", "e:L1:R-3:R-2"},
    {"oe_m5_m2", "e:L1:Rm5:Rm0"},
    {"oe_m5_m2", "e:L2:L-1:c"},
    {"oe_m5_m2", "e:L2:Lm0:Lm1"},
    {"oe_m5_m2", "e:L2:R-1:c"},
    {"oe_m5_m2", "e:L2:Rm0:R-3"},
    {"oe_m5_m2", "e:L2:Rm0:Rm1"},
    {"oe_m5_m2", "e:L2:Rm3:Rm4"},
    {"oe_m5_m2", "e:L3:Rm5:Rm0"},
    {"oe_m5_m2", "e:Lm0:L-2:L-1"},
    {"oe_m5_m2", "e:Lm0:Lm0:Lm1"},
    {"oe_m5_m2", "e:Lm0:Lm3:Lm4"},
    {"oe_m5_m2", "e:Lm0:R-2:R-1"},
    {"oe_m5_m2", "e:Lm0:Rm4:Rm5"},
    {"oe_m5_m2", "e:Lm1:Lm4:Lm5"},
    {"oe_m5_m2", "e:Lm1:R-3:R-2"},
    {"oe_m5_m2", "e:Lm1:R1:R2"},
    {"oe_m5_m2", "e:Lm1:Rm1:Rm2"},
    {"oe_m5_m2", "e:Lm2:Lm2:Lm3"},
    {"oe_m5_m2", "e:Lm2:R-3:R-2"},
    {"oe_m5_m2", "e:Lm2:Rm1:Rm2"},
    {"oe_m5_m2", "e:Lm2:Rm5:Rm0"},
    {"oe_m5_m2", "e:Lm2:c:R1"},
    {"oe_m5_m2", "e:Lm3:R1:R2"},
    {"oe_m5_m2", "e:Lm3:R3:Rm0"},
    {"oe_m5_m2", "e:Lm3:Rm2:Rm3"},
    {"oe_m5_m2", "e:Lm3:Rm5:Rm0"},
    {"oe_m5_m2", "e:Lm4:Rm0:R-3"},
    {"oe_m5_m2", "e:Lm4:Rm0:Rm1"},
    {"oe_m5_m2", "e:Lm5:R-3:R-2"},
    {"oe_m5_m2", "e:Lm5:Rm1:Rm2"},
    {"oe_m5_m2", "e:R-1:R-3:R-2"},
    {"oe_m5_m2", "e:R-1:Rm1:Rm2"},
    {"oe_m5_m2", "e:R-1:Rm4:Rm5"},
    {"oe_m5_m2", "e:R-2:L-1:c"},
    {"oe_m5_m2", "e:R-2:R2:R3"},
    {"oe_m5_m2", "e:R-2:Rm4:Rm5"},
    {"oe_m5_m2", "e:R-3:Rm2:Rm3"},
    {"oe_m5_m2", "e:R1:R2:R3"},
    {"oe_m5_m2", "e:R1:Rm4:Rm5"},
    {"oe_m5_m2", "e:R2:R-1:c"},
    {"oe_m5_m2", "e:R2:Rm2:Rm3"},
    {"oe_m5_m2", "e:R3:Rm1:Rm2"},
    {"oe_m5_m2", "e:R3:Rm4:Rm5"},
    {"oe_m5_m2", "e:Rm0:Rm1:Rm2"},
    {"oe_m5_m2", "e:Rm1:R-2:R-1"},
    {"oe_m5_m2", "e:Rm2:R-1:c"},
    {"oe_m5_m2", "e:Rm2:Rm2:Rm3"},
    {"oe_m5_m2", "e:Rm2:Rm5:Rm0"},
    {"oe_m5_m2", "e:Rm3:Lm0:Lm1"},
    {"oe_m5_m2", "e:Rm3:Rm0:Rm1"},
    {"oe_m5_m2", "e:Rm4:Rm4:Rm5"},
    {"oe_m5_m2", "n:Lm0:-3"},
    {"oe_m5_m2", "n:Lm0:3"},
    {"oe_m5_m2", "n:Lm1:-3"},
    {"oe_m5_m2", "n:Lm1:3"},
    {"oe_m5_m2", "n:Rm0:-3"},
    {"oe_m5_m2", "n:Rm0:1"},
    {"oe_m5_m2", "n:Rm0:3"},
    {"oe_m5_m2", "n:Rm1:4"},
    {"oe_m5_m4", "e:L-1:Lm0:Lm1"},
    {"oe_m5_m4", "e:L-1:R-2:R-1"},
    {"oe_m5_m4", "e:L-1:Rm1:Rm2"},
    {"oe_m5_m4", "e:L-2:L2:L3"},
    {"oe_m5_m4", "e:L-2:Lm2:Lm3"},
    {"oe_m5_m4", "e:L-2:Lm4:Lm5"},
    {"oe_m5_m4", "e:L-2:R-1:c"},
    {"oe_m5_m4", "e:L-2:Rm0:Rm1"},
    {"oe_m5_m4", "e:L-2:c:L1"},
    {"oe_m5_m4", "e:L-3:L1:L2"},
    {"oe_m5_m4", "e:L-3:Lm0:Lm1"},
    {"oe_m5_m4", "e:L-3:R1:R2"},
    {"oe_m5_m4", "e:L-3:Rm2:R-3"},
    {"oe_m5_m4", "e:L-3:Rm2:Rm3"},
    {"oe_m5_m4", "e:L1:L2:L3"},
    {"oe_m5_m4", "e:L1:Lm1:Lm2"},
    {"oe_m5_m4", "e:L1:Lm4:Lm5"},
    {"oe_m5_m4", "e:L1:R-3:R-2"},
    {"oe_m5_m4", "e:L1:R3:Rm0"},
    {"oe_m5_m4", "e:L2:L3:Lm0"},
    {"oe_m5_m4", "e:L2:Lm3:Lm4"},
    {"oe_m5_m4", "e:L2:R-3:R-2"},
    {"oe_m5_m4", "e:L2:R2:R3"},
    {"oe_m5_m4", "e:L2:Rm0:Rm1"},
    {"oe_m5_m4", "e:L2:Rm3:Rm4"},
    {"oe_m5_m4", "e:L2:c:R1"},
    {"oe_m5_m4", "e:L3:R-3:R-2"},
    {"oe_m5_m4", "e:L3:Rm0:Rm1"},
    {"oe_m5_m4", "e:L3:Rm3:Rm4"},
    {"oe_m5_m4", "e:Lm0:Lm1:Lm2"},
    {"oe_m5_m4", "e:Lm0:R-2:R-1"},
    {"oe_m5_m4", "e:Lm0:R3:Rm0"},
    {"oe_m5_m4", "e:Lm0:Rm3:Rm4"},
    {"oe_m5_m4", "e:Lm0:Rm5:Rm0"},
    {"oe_m5_m4", "e:Lm1:R1:R2"},
    {"oe_m5_m4", "e:Lm1:Rm1:Rm2"},
    {"oe_m5_m4", "e:Lm2:Lm2:Lm3"},
    {"oe_m5_m4", "e:Lm2:Lm5:Lm0"},
    {"oe_m5_m4", "e:Lm2:R-2:R-1"},
    {"oe_m5_m4", "e:Lm2:Rm0:Rm1"},
    {"oe_m5_m4", "e:Lm3:Lm0:Lm1"},
    {"oe_m5_m4", "e:Lm3:R-3:R-2"},
    {"oe_m5_m4", "e:Lm3:R1:R2"},
    {"oe_m5_m4", "e:Lm4:Lm4:Lm5"},
    {"oe_m5_m4", "e:Lm4:R3:Rm0"},
    {"oe_m5_m4", "e:Lm4:Rm5:Rm0"},
    {"oe_m5_m4", "e:Lm5:Rm3:Rm4"},
    {"oe_m5_m4", "e:R-1:Lm2:Lm3"},
    {"oe_m5_m4", "e:R-1:Lm5:Lm0"},
    {"oe_m5_m4", "e:R-1:Rm0:Rm1"},
    {"oe_m5_m4", "e:R-1:Rm3:Rm4"},
    {"oe_m5_m4", "e:R-2:R3:Rm0"},
    {"oe_m5_m4", "e:R-2:Rm2:R-3"},
    {"oe_m5_m4", "e:R-2:Rm2:Rm3"},
    {"oe_m5_m4", "e:R-2:Rm5:Rm0"},
    {"oe_m5_m4", "e:R-3:Rm1:Rm2"},
    {"oe_m5_m4", "e:R-3:Rm4:Rm5"},
    {"oe_m5_m4", "e:R1:Rm2:R-3"},
    {"oe_m5_m4", "e:R2:Rm5:Rm0"},
    {"oe_m5_m4", "e:R3:R-2:R-1"},
    {"oe_m5_m4", "e:Rm0:L-2:L-1"},
    {"oe_m5_m4", "e:Rm0:L2:L3"},
    {"oe_m5_m4", "e:Rm0:Rm1:Rm2"},
    {"oe_m5_m4", "e:Rm1:Lm1:Lm2"},
    {"oe_m5_m4", "e:Rm1:Lm4:Lm5"},
    {"oe_m5_m4", "e:Rm1:R1:R2"},
    {"oe_m5_m4", "e:Rm1:Rm2:Rm3"},
    {"oe_m5_m4", "e:Rm2:Rm3:Rm4"},
    {"oe_m5_m4", "e:Rm3:L1:L2"},
    {"oe_m5_m4", "e:Rm3:Lm2:Lm3"},
    {"oe_m5_m4", "e:Rm3:Rm4:Rm5"},
    {"oe_m5_m4", "e:Rm4:L-2:L-1"},
    {"oe_m5_m4", "e:Rm4:R3:Rm0"},
    {"oe_m5_m4", "e:Rm4:Rm5:Rm0"},
    {"oe_m5_m4", "e:Rm5:Rm0:Rm1"},
    {"oe_m5_m4", "n:Lm0:1"},
    {"oe_m5_m4", "n:Lm0:3"},
    {"oe_m5_m4", "n:Lm1:-4"},
    {"oe_m5_m4", "n:Lm1:4"},
    {"oo_3_5", "e:L1:R3:R4"},
    {"oo_3_5", "e:R1:R2:R3"},
    {"oo_3_5", "e:R3:L1:L2"},
    {"oo_3_7", "e:L1:R3:R4"},
    {"oo_3_7", "e:L2:R5:R6"},
    {"oo_3_7", "e:R1:R2:R3"},
    {"oo_3_7", "e:R2:R3:R4"},
    {"oo_3_7", "e:R2:R6:c"},
    {"oo_3_7", "e:R4:R1:R2"},
    {"oo_3_7", "e:R5:R6:c"},
    {"oo_3_m1", "e:L1:R3:Rm0"},
    {"oo_3_m1", "e:L1:Rm1:Rm2"},
    {"oo_3_m1", "e:L1:Rm5:R-3"},
    {"oo_3_m1", "e:L1:c:R1"},
    {"oo_3_m1", "e:L2:Rm0:Rm1"},
    {"oo_3_m1", "e:L2:Rm3:Rm4"},
    {"oo_3_m1", "e:R-1:R2:R3"},
    {"oo_3_m1", "e:R-1:Rm1:Rm2"},
    {"oo_3_m1", "e:R-1:Rm4:Rm5"},
    {"oo_3_m1", "e:R-2:R2:R3"},
    {"oo_3_m1", "e:R-3:L1:L2"},
    {"oo_3_m1", "e:R-3:Rm1:Rm2"},
    {"oo_3_m1", "e:R-3:Rm4:Rm5"},
    {"oo_3_m1", "e:R1:R3:Rm0"},
    {"oo_3_m1", "e:R1:Rm5:Rm0"},
    {"oo_3_m1", "e:R1:c:L1"},
    {"oo_3_m1", "e:R2:Rm4:Rm5"},
    {"oo_3_m1", "e:R3:L1:L2"},
    {"oo_3_m1", "e:R3:Rm1:Rm2"},
    {"oo_3_m1", "e:Rm0:L2:c"},
    {"oo_3_m1", "e:Rm0:Rm1:Rm2"},
    {"oo_3_m1", "e:Rm0:Rm4:Rm5"},
    {"oo_3_m1", "e:Rm1:R3:Rm0"},
    {"oo_3_m1", "e:Rm1:Rm2:Rm3"},
    {"oo_3_m1", "e:Rm1:Rm5:Rm0"},
    {"oo_3_m1", "e:Rm1:c:R1"},
    {"oo_3_m1", "e:Rm2:R-1:c"},
    {"oo_3_m1", "e:Rm2:R2:R3"},
    {"oo_3_m1", "e:Rm2:Rm0:Rm1"},
    {"oo_3_m1", "e:Rm2:Rm3:Rm4"},
    {"oo_3_m1", "e:Rm3:Rm4:Rm5"},
    {"oo_3_m3", "e:L1:Rm1:R-3"},
    {"oo_3_m3", "e:L1:Rm1:Rm2"},
    {"oo_3_m3", "e:L1:Rm4:Rm5"},
    {"oo_3_m3", "e:L2:Rm4:Rm5"},
    {"oo_3_m3", "e:R-1:R3:Rm0"},
    {"oo_3_m3", "e:R-1:Rm1:R-3"},
    {"oo_3_m3", "e:R-1:Rm1:Rm2"},
    {"oo_3_m3", "e:R-2:R1:R2"},
    {"oo_3_m3", "e:R-2:Rm0:Rm1"},
    {"oo_3_m3", "e:R-3:Rm3:Rm4"},
    {"oo_3_m3", "e:R1:R2:R3"},
    {"oo_3_m3", "e:R1:Rm0:Rm1"},
    {"oo_3_m3", "e:R2:Rm0:Rm1"},
    {"oo_3_m3", "e:R3:L2:c"},
    {"oo_3_m3", "e:Rm0:R1:R2"},
    {"oo_3_m3", "e:Rm0:Rm0:Rm1"},
    {"oo_3_m3", "e:Rm0:Rm3:Rm4"},
    {"oo_3_m3", "e:Rm1:L2:c"},
    {"oo_3_m3", "e:Rm1:R2:R3"},
    {"oo_3_m3", "e:Rm1:Rm4:Rm5"},
    {"oo_3_m3", "e:Rm2:Rm2:Rm3"},
    {"oo_3_m3", "n:Rm0:-3"},
    {"oo_3_m3", "n:Rm0:3"},
    {"oo_3_m3", "n:Rm1:-3"},
    {"oo_3_m3", "n:Rm1:3"},
    {"oo_3_m5", "e:L1:R3:Rm0"},
    {"oo_3_m5", "e:L1:Rm3:Rm4"},
    {"oo_3_m5", "e:L2:R-3:R-2"},
    {"oo_3_m5", "e:L2:c:R1"},
    {"oo_3_m5", "e:R-1:Rm2:Rm3"},
    {"oo_3_m5", "e:R-1:Rm4:Rm5"},
    {"oo_3_m5", "e:R-2:R2:R3"},
    {"oo_3_m5", "e:R-2:Rm3:R-3"},
    {"oo_3_m5", "e:R-2:Rm3:Rm4"},
    {"oo_3_m5", "e:R-3:R1:R2"},
    {"oo_3_m5", "e:R-3:Rm0:Rm1"},
    {"oo_3_m5", "e:R1:Rm0:Rm1"},
    {"oo_3_m5", "e:R1:Rm3:Rm4"},
    {"oo_3_m5", "e:R2:Rm1:Rm2"},
    {"oo_3_m5", "e:R3:Rm0:Rm1"},
    {"oo_3_m5", "e:Rm0:L2:c"},
    {"oo_3_m5", "e:Rm0:Rm0:Rm1"},
    {"oo_3_m5", "e:Rm0:Rm3:R-3"},
    {"oo_3_m5", "e:Rm0:Rm3:Rm4"},
    {"oo_3_m5", "e:Rm1:R-3:R-2"},
    {"oo_3_m5", "e:Rm1:Rm4:Rm5"},
    {"oo_3_m5", "e:Rm2:R-2:R-1"},
    {"oo_3_m5", "e:Rm2:Rm2:Rm3"},
    {"oo_3_m5", "e:Rm4:L2:c"},
    {"oo_3_m5", "e:c:c:L1"},
    {"oo_3_m5", "n:Rm0:-3"},
    {"oo_3_m5", "n:Rm0:3"},
    {"oo_3_m5", "n:Rm1:-3"},
    {"oo_3_m5", "n:Rm1:3"},
    {"oo_5_5", "e:L2:R1:R2"},
    {"oo_5_5", "e:L2:R3:R4"},
    {"oo_5_5", "e:L3:L4:c"},
    {"oo_5_5", "e:L3:R2:R3"},
    {"oo_5_5", "e:L3:c:R1"},
    {"oo_5_5", "e:L4:R2:R3"},
    {"oo_5_m1", "e:L1:L2:L3"},
    {"oo_5_m1", "e:L1:L4:c"},
    {"oo_5_m1", "e:L1:R-1:c"},
    {"oo_5_m1", "e:L1:Rm0:Rm1"},
    {"oo_5_m1", "e:L1:Rm3:Rm4"},
    {"oo_5_m1", "e:L1:c:R1"},
    {"oo_5_m1", "e:L2:L4:c"},
    {"oo_5_m1", "e:L2:R-3:R-2"},
    {"oo_5_m1", "e:L2:Rm0:Rm1"},
    {"oo_5_m1", "e:L2:Rm3:Rm4"},
    {"oo_5_m1", "e:L2:c:R1"},
    {"oo_5_m1", "e:L3:R2:R3"},
    {"oo_5_m1", "e:L4:R-1:c"},
    {"oo_5_m1", "e:L4:R2:R3"},
    {"oo_5_m1", "e:L4:Rm0:Rm1"},
    {"oo_5_m1", "e:L4:c:R1"},
    {"oo_5_m1", "e:R-1:L4:c"},
    {"oo_5_m1", "e:R-1:R-3:R-2"},
    {"oo_5_m1", "e:R-1:Rm0:Rm1"},
    {"oo_5_m1", "e:R-1:Rm3:Rm4"},
    {"oo_5_m1", "e:R-2:L1:L2"},
    {"oo_5_m1", "e:R-3:Rm0:Rm1"},
    {"oo_5_m1", "e:R-3:Rm3:Rm4"},
    {"oo_5_m1", "e:R1:Rm0:Rm1"},
    {"oo_5_m1", "e:R2:R3:Rm0"},
    {"oo_5_m1", "e:R2:Rm2:Rm3"},
    {"oo_5_m1", "e:R2:Rm5:Rm0"},
    {"oo_5_m1", "e:R3:Rm1:Rm2"},
    {"oo_5_m1", "e:Rm0:Rm0:Rm1"},
    {"oo_5_m1", "e:Rm0:Rm3:Rm4"},
    {"oo_5_m1", "e:Rm1:L2:L3"},
    {"oo_5_m1", "e:Rm1:Rm2:Rm3"},
    {"oo_5_m1", "e:Rm1:Rm5:Rm0"},
    {"oo_5_m1", "e:Rm3:Rm3:Rm4"},
    {"oo_5_m1", "e:Rm4:Rm5:Rm0"},
    {"oo_5_m1", "e:c:L2:L3"},
    {"oo_5_m1", "n:Rm0:-3"},
    {"oo_5_m1", "n:Rm0:1"},
    {"oo_5_m1", "n:Rm0:3"},
    {"oo_5_m3", "e:L1:R-3:R-2"},
    {"oo_5_m3", "e:L1:R1:R2"},
    {"oo_5_m3", "e:L1:R3:Rm0"},
    {"oo_5_m3", "e:L1:Rm2:Rm3"},
    {"oo_5_m3", "e:L1:Rm5:Rm0"},
    {"oo_5_m3", "e:L2:L3:L4"},
    {"oo_5_m3", "e:L2:Rm1:R-3"},
    {"oo_5_m3", "e:L2:Rm3:Rm4"},
    {"oo_5_m3", "e:L3:R2:R3"},
    {"oo_5_m3", "e:L3:Rm4:Rm5"},
    {"oo_5_m3", "e:L4:R-3:R-2"},
    {"oo_5_m3", "e:L4:Rm5:Rm0"},
    {"oo_5_m3", "e:R-1:R2:R3"},
    {"oo_5_m3", "e:R-1:Rm1:Rm2"},
    {"oo_5_m3", "e:R-1:Rm4:Rm5"},
    {"oo_5_m3", "e:R-2:L2:L3"},
    {"oo_5_m3", "e:R-2:Rm0:Rm1"},
    {"oo_5_m3", "e:R-2:c:R1"},
    {"oo_5_m3", "e:R1:R-2:R-1"},
    {"oo_5_m3", "e:R2:Rm1:R-3"},
    {"oo_5_m3", "e:R2:Rm1:Rm2"},
    {"oo_5_m3", "e:R3:Rm3:Rm4"},
    {"oo_5_m3", "e:Rm0:L3:L4"},
    {"oo_5_m3", "e:Rm0:Rm2:Rm3"},
    {"oo_5_m3", "e:Rm1:Rm0:Rm1"},
    {"oo_5_m3", "e:Rm1:Rm3:Rm4"},
    {"oo_5_m3", "e:Rm2:L1:L2"},
    {"oo_5_m3", "e:Rm4:Rm4:Rm5"},
    {"oo_5_m3", "n:Rm0:-4"},
    {"oo_5_m3", "n:Rm0:2"},
    {"oo_5_m3", "n:Rm1:-4"},
    {"oo_5_m3", "n:Rm1:2"},
    {"oo_5_m5", "e:L1:R-3:R-2"},
    {"oo_5_m5", "e:L1:R2:R3"},
    {"oo_5_m5", "e:L1:Rm1:Rm2"},
    {"oo_5_m5", "e:L1:Rm4:Rm5"},
    {"oo_5_m5", "e:L2:L3:L4"},
    {"oo_5_m5", "e:L2:R-2:R-1"},
    {"oo_5_m5", "e:L2:Rm3:Rm4"},
    {"oo_5_m5", "e:L3:R-1:c"},
    {"oo_5_m5", "e:L3:R2:R3"},
    {"oo_5_m5", "e:L3:Rm4:Rm5"},
    {"oo_5_m5", "e:L4:R-2:R-1"},
    {"oo_5_m5", "e:L4:Rm0:Rm1"},
    {"oo_5_m5", "e:L4:Rm3:R-3"},
    {"oo_5_m5", "e:L4:Rm3:Rm4"},
    {"oo_5_m5", "e:R-1:R2:R3"},
    {"oo_5_m5", "e:R-1:Rm4:Rm5"},
    {"oo_5_m5", "e:R-2:L2:L3"},
    {"oo_5_m5", "e:R-2:R1:R2"},
    {"oo_5_m5", "e:R-2:Rm0:Rm1"},
    {"oo_5_m5", "e:R-3:R2:R3"},
    {"oo_5_m5", "e:R2:Rm2:Rm3"},
    {"oo_5_m5", "e:R3:Rm0:Rm1"},
    {"oo_5_m5", "e:R3:Rm3:Rm4"},
    {"oo_5_m5", "e:Rm0:Rm1:Rm2"},
    {"oo_5_m5", "e:Rm0:Rm4:Rm5"},
    {"oo_5_m5", "e:Rm1:L2:L3"},
    {"oo_5_m5", "e:Rm1:R-1:c"},
    {"oo_5_m5", "e:Rm1:Rm2:Rm3"},
    {"oo_5_m5", "e:Rm1:Rm5:Rm0"},
    {"oo_5_m5", "e:Rm2:Rm0:Rm1"},
    {"oo_5_m5", "e:Rm2:Rm3:Rm4"},
    {"oo_5_m5", "e:Rm3:R2:R3"},
    {"oo_5_m5", "e:Rm3:Rm4:Rm5"},
    {"oo_5_m5", "e:Rm5:c:R1"},
    {"oo_7_7", "e:L1:L6:c"},
    {"oo_7_7", "e:L1:R6:c"},
    {"oo_7_7", "e:L1:c:R1"},
    {"oo_7_7", "e:L2:L6:c"},
    {"oo_7_7", "e:L2:R1:R2"},
    {"oo_7_7", "e:L3:L4:L5"},
    {"oo_7_7", "e:L3:L6:c"},
    {"oo_7_7", "e:L3:R6:c"},
    {"oo_7_7", "e:L3:c:R1"},
    {"oo_7_7", "e:L4:R1:R2"},
    {"oo_7_7", "e:L4:R4:R5"},
    {"oo_7_7", "e:L5:R5:R6"},
    {"oo_7_7", "e:L6:R4:R5"},
    {"oo_7_7", "e:L6:c:R1"},
    {"oo_7_7", "e:R1:L2:L3"},
    {"oo_7_7", "e:R1:R6:c"},
    {"oo_7_7", "e:R2:R3:R4"},
    {"oo_7_7", "e:R3:L6:c"},
    {"oo_7_7", "e:R3:R4:R5"},
    {"oo_7_7", "e:R4:R6:c"},
    {"oo_7_7", "e:R4:c:L1"},
    {"oo_7_m1", "e:L1:L3:L4"},
    {"oo_7_m1", "e:L1:L5:L6"},
    {"oo_7_m1", "e:L1:Rm0:Rm1"},
    {"oo_7_m1", "e:L2:L4:L5"},
    {"oo_7_m1", "e:L2:R3:Rm0"},
    {"oo_7_m1", "e:L2:Rm5:R-3"},
    {"oo_7_m1", "e:L2:Rm5:Rm0"},
    {"oo_7_m1", "e:L3:Rm1:Rm2"},
    {"oo_7_m1", "e:L3:Rm4:Rm5"},
    {"oo_7_m1", "e:L4:Rm1:Rm2"},
    {"oo_7_m1", "e:L4:Rm4:Rm5"},
    {"oo_7_m1", "e:L5:R-3:R-2"},
    {"oo_7_m1", "e:L6:R1:R2"},
    {"oo_7_m1", "e:L6:Rm0:Rm1"},
    {"oo_7_m1", "e:R-1:R3:Rm0"},
    {"oo_7_m1", "e:R-1:Rm2:Rm3"},
    {"oo_7_m1", "e:R-1:Rm5:R-3"},
    {"oo_7_m1", "e:R-2:R1:R2"},
    {"oo_7_m1", "e:R-2:Rm0:Rm1"},
    {"oo_7_m1", "e:R-2:Rm4:Rm5"},
    {"oo_7_m1", "e:R-3:Rm2:Rm3"},
    {"oo_7_m1", "e:R1:L3:L4"},
    {"oo_7_m1", "e:R1:Rm0:Rm1"},
    {"oo_7_m1", "e:R1:Rm3:Rm4"},
    {"oo_7_m1", "e:R2:Rm4:Rm5"},
    {"oo_7_m1", "e:R3:Rm0:Rm1"},
    {"oo_7_m1", "e:Rm0:L6:c"},
    {"oo_7_m1", "e:Rm0:Rm2:Rm3"},
    {"oo_7_m1", "e:Rm1:Rm0:Rm1"},
    {"oo_7_m1", "e:Rm1:Rm3:Rm4"},
    {"oo_7_m1", "e:Rm3:L6:c"},
    {"oo_7_m1", "e:Rm3:c:L1"},
    {"oo_7_m1", "e:Rm4:Rm4:Rm5"},
    {"oo_7_m1", "n:Rm0:-4"},
    {"oo_7_m1", "n:Rm0:2"},
    {"oo_7_m1", "n:Rm1:-4"},
    {"oo_7_m1", "n:Rm1:2"},
    {"oo_7_m3", "e:L1:L2:L3"},
    {"oo_7_m3", "e:L1:Rm4:Rm5"},
    {"oo_7_m3", "e:L2:L6:c"},
    {"oo_7_m3", "e:L2:R-1:c"},
    {"oo_7_m3", "e:L2:R1:R2"},
    {"oo_7_m3", "e:L2:R3:Rm0"},
    {"oo_7_m3", "e:L2:Rm5:Rm0"},
    {"oo_7_m3", "e:L3:L5:L6"},
    {"oo_7_m3", "e:L3:R-3:R-2"},
    {"oo_7_m3", "e:L3:R3:Rm0"},
    {"oo_7_m3", "e:L3:Rm5:Rm0"},
    {"oo_7_m3", "e:L4:L5:L6"},
    {"oo_7_m3", "e:L4:Rm2:Rm3"},
    {"oo_7_m3", "e:L4:Rm4:Rm5"},
    {"oo_7_m3", "e:L5:Rm1:Rm2"},
    {"oo_7_m3", "e:L6:R-2:R-1"},
    {"oo_7_m3", "e:L6:Rm0:Rm1"},
    {"oo_7_m3", "e:L6:Rm2:Rm3"},
    {"oo_7_m3", "e:R-1:Rm4:Rm5"},
    {"oo_7_m3", "e:R-2:R1:R2"},
    {"oo_7_m3", "e:R-2:Rm0:Rm1"},
    {"oo_7_m3", "e:R-2:Rm3:Rm4"},
    {"oo_7_m3", "e:R-3:Rm4:Rm5"},
    {"oo_7_m3", "e:R1:L5:L6"},
    {"oo_7_m3", "e:R1:R3:Rm0"},
    {"oo_7_m3", "e:R1:Rm2:Rm3"},
    {"oo_7_m3", "e:R1:Rm5:Rm0"},
    {"oo_7_m3", "e:R2:Rm3:Rm4"},
    {"oo_7_m3", "e:Rm0:R2:R3"},
    {"oo_7_m3", "e:Rm0:Rm1:Rm2"},
    {"oo_7_m3", "e:Rm1:L1:L2"},
    {"oo_7_m3", "e:Rm1:R3:Rm0"},
    {"oo_7_m3", "e:Rm1:Rm3:Rm4"},
    {"oo_7_m3", "e:Rm1:Rm5:Rm0"},
    {"oo_7_m3", "e:Rm2:Rm2:Rm3"},
    {"oo_7_m3", "e:Rm2:Rm5:Rm0"},
    {"oo_7_m3", "e:Rm3:Rm2:Rm3"},
    {"oo_7_m3", "e:Rm4:L2:L3"},
    {"oo_7_m3", "e:Rm5:Rm4:Rm5"},
    {"oo_7_m3", "n:Rm0:1"},
    {"oo_7_m3", "n:Rm0:3"},
    {"oo_7_m3", "n:Rm1:-4"},
    {"oo_7_m3", "n:Rm1:4"},
    {"oo_7_m5", "e:L1:L4:L5"},
    {"oo_7_m5", "e:L1:R2:R3"},
    {"oo_7_m5", "e:L1:Rm4:Rm5"},
    {"oo_7_m5", "e:L2:L4:L5"},
    {"oo_7_m5", "e:L2:R-2:R-1"},
    {"oo_7_m5", "e:L2:R3:Rm0"},
    {"oo_7_m5", "e:L2:Rm3:R-3"},
    {"oo_7_m5", "e:L2:Rm3:Rm4"},
    {"oo_7_m5", "e:L2:Rm5:Rm0"},
    {"oo_7_m5", "e:L3:L4:L5"},
    {"oo_7_m5", "e:L3:L6:c"},
    {"oo_7_m5", "e:L3:R3:Rm0"},
    {"oo_7_m5", "e:L3:Rm1:Rm2"},
    {"oo_7_m5", "e:L3:c:R1"},
    {"oo_7_m5", "e:L4:L6:c"},
    {"oo_7_m5", "e:L4:R-3:R-2"},
    {"oo_7_m5", "e:L4:R1:R2"},
    {"oo_7_m5", "e:L4:Rm4:Rm5"},
    {"oo_7_m5", "e:L5:R-1:c"},
    {"oo_7_m5", "e:L5:R2:R3"},
    {"oo_7_m5", "e:L5:Rm4:Rm5"},
    {"oo_7_m5", "e:L6:R-2:R-1"},
    {"oo_7_m5", "e:L6:R2:R3"},
    {"oo_7_m5", "e:L6:Rm4:Rm5"},
    {"oo_7_m5", "e:R-1:R3:Rm0"},
    {"oo_7_m5", "e:R-1:Rm1:Rm2"},
    {"oo_7_m5", "e:R-2:R1:R2"},
    {"oo_7_m5", "e:R-2:Rm0:Rm1"},
    {"oo_7_m5", "e:R-3:R3:Rm0"},
    {"oo_7_m5", "e:R-3:Rm5:Rm0"},
    {"oo_7_m5", "e:R1:R2:R3"},
    {"oo_7_m5", "e:R1:Rm2:Rm3"},
    {"oo_7_m5", "e:R2:Rm1:Rm2"},
    {"oo_7_m5", "e:R2:Rm4:Rm5"},
    {"oo_7_m5", "e:R3:L5:L6"},
    {"oo_7_m5", "e:Rm0:L6:c"},
    {"oo_7_m5", "e:Rm0:Rm0:Rm1"},
    {"oo_7_m5", "e:Rm0:Rm3:Rm4"},
    {"oo_7_m5", "e:Rm1:L3:L4"},
    {"oo_7_m5", "e:Rm1:R-1:c"},
    {"oo_7_m5", "e:Rm1:R2:R3"},
    {"oo_7_m5", "e:Rm1:Rm4:Rm5"},
    {"oo_7_m5", "e:Rm1:c:L1"},
    {"oo_7_m5", "e:Rm2:L6:c"},
    {"oo_7_m5", "e:Rm2:Rm2:Rm3"},
    {"oo_7_m5", "e:Rm3:R-2:R-1"},
    {"oo_7_m5", "e:Rm4:R-1:c"},
    {"oo_7_m5", "n:Rm0:-3"},
    {"oo_7_m5", "n:Rm0:3"},
    {"oo_7_m5", "n:Rm1:-3"},
    {"oo_7_m5", "n:Rm1:3"},
    {"oo_m1_m1", "e:L-1:L-3:L-2"},
    {"oo_m1_m1", "e:L-1:R-3:R-2"},
    {"oo_m1_m1", "e:L-1:R2:R3"},
    {"oo_m1_m1", "e:L-1:Rm1:Rm2"},
    {"oo_m1_m1", "e:L-1:Rm4:Rm5"},
    {"oo_m1_m1", "e:L-1:c:L1"},
    {"oo_m1_m1", "e:L-2:Lm3:Lm4"},
    {"oo_m1_m1", "e:L-2:Lm5:L-3"},
    {"oo_m1_m1", "e:L-2:R2:R3"},
    {"oo_m1_m1", "e:L-2:Rm0:Rm1"},
    {"oo_m1_m1", "e:L-2:Rm2:Rm3"},
    {"oo_m1_m1", "e:L-2:c:L1"},
    {"oo_m1_m1", "e:L-3:Lm2:Lm3"},
    {"oo_m1_m1", "e:L-3:R-3:R-2"},
    {"oo_m1_m1", "e:L-3:Rm4:Rm5"},
    {"oo_m1_m1", "e:L1:L2:L3"},
    {"oo_m1_m1", "e:L1:R-3:R-2"},
    {"oo_m1_m1", "e:L1:R2:R3"},
    {"oo_m1_m1", "e:L1:Rm0:Rm1"},
    {"oo_m1_m1", "e:L1:Rm3:Rm4"},
    {"oo_m1_m1", "e:L2:Lm0:Lm1"},
    {"oo_m1_m1", "e:L2:R-3:R-2"},
    {"oo_m1_m1", "e:L2:Rm0:Rm1"},
    {"oo_m1_m1", "e:L2:Rm3:Rm4"},
    {"oo_m1_m1", "e:L3:Lm2:Lm3"},
    {"oo_m1_m1", "e:L3:R-3:R-2"},
    {"oo_m1_m1", "e:L3:R1:R2"},
    {"oo_m1_m1", "e:L3:Rm0:Rm1"},
    {"oo_m1_m1", "e:L3:Rm4:Rm5"},
    {"oo_m1_m1", "e:Lm0:L-2:L-1"},
    {"oo_m1_m1", "e:Lm0:Lm2:Lm3"},
    {"oo_m1_m1", "e:Lm0:Lm4:Lm5"},
    {"oo_m1_m1", "e:Lm0:R-3:R-2"},
    {"oo_m1_m1", "e:Lm0:R1:R2"},
    {"oo_m1_m1", "e:Lm1:L-1:c"},
    {"oo_m1_m1", "e:Lm1:L2:L3"},
    {"oo_m1_m1", "e:Lm1:Lm1:Lm2"},
    {"oo_m1_m1", "e:Lm1:Lm4:Lm5"},
    {"oo_m1_m1", "e:Lm1:R-3:R-2"},
    {"oo_m1_m1", "e:Lm1:R1:R2"},
    {"oo_m1_m1", "e:Lm1:Rm0:Rm1"},
    {"oo_m1_m1", "e:Lm1:Rm2:Rm3"},
    {"oo_m1_m1", "e:Lm2:Lm1:Lm2"},
    {"oo_m1_m1", "e:Lm2:R-2:R-1"},
    {"oo_m1_m1", "e:Lm2:Rm1:Rm2"},
    {"oo_m1_m1", "e:Lm2:Rm4:Rm5"},
    {"oo_m1_m1", "e:Lm3:Lm3:Lm4"},
    {"oo_m1_m1", "e:Lm3:R-2:R-1"},
    {"oo_m1_m1", "e:Lm3:Rm1:Rm2"},
    {"oo_m1_m1", "e:Lm3:Rm4:Rm5"},
    {"oo_m1_m1", "e:Lm4:L1:L2"},
    {"oo_m1_m1", "e:Lm4:R-3:R-2"},
    {"oo_m1_m1", "e:Lm4:R2:R3"},
    {"oo_m1_m1", "e:Lm5:Lm0:Lm1"},
    {"oo_m1_m1", "e:Lm5:R1:R2"},
    {"oo_m1_m1", "e:Lm5:Rm1:Rm2"},
    {"oo_m1_m1", "e:Lm5:Rm4:Rm5"},
    {"oo_m1_m1", "e:R-1:L-1:c"},
    {"oo_m1_m1", "e:R-1:Rm0:Rm1"},
    {"oo_m1_m1", "e:R-1:Rm2:Rm3"},
    {"oo_m1_m1", "e:R-1:c:L1"},
    {"oo_m1_m1", "e:R-2:Rm1:Rm2"},
    {"oo_m1_m1", "e:R-3:Rm0:Rm1"},
    {"oo_m1_m1", "e:R-3:Rm4:Rm5"},
    {"oo_m1_m1", "e:R-3:c:R1"},
    {"oo_m1_m1", "e:R1:R-2:R-1"},
    {"oo_m1_m1", "e:R1:R3:Rm0"},
    {"oo_m1_m1", "e:R1:Rm5:Rm0"},
    {"oo_m1_m1", "e:R2:Rm0:Rm1"},
    {"oo_m1_m1", "e:R2:Rm3:Rm4"},
    {"oo_m1_m1", "e:R3:R-1:c"},
    {"oo_m1_m1", "e:R3:Rm0:Rm1"},
    {"oo_m1_m1", "e:Rm0:R2:R3"},
    {"oo_m1_m1", "e:Rm0:Rm1:Rm2"},
    {"oo_m1_m1", "e:Rm0:Rm4:Rm5"},
    {"oo_m1_m1", "e:Rm1:L-1:c"},
    {"oo_m1_m1", "e:Rm1:R1:R2"},
    {"oo_m1_m1", "e:Rm1:Rm2:Rm3"},
    {"oo_m1_m1", "e:Rm1:Rm5:Rm0"},
    {"oo_m1_m1", "e:Rm2:Rm0:Rm1"},
    {"oo_m1_m1", "e:Rm2:Rm3:Rm4"},
    {"oo_m1_m1", "e:Rm3:Rm4:Rm5"},
    {"oo_m1_m1", "e:Rm4:Lm2:Lm3"},
    {"oo_m1_m1", "e:Rm4:R-1:c"},
    {"oo_m1_m1", "n:Lm0:-2"},
    {"oo_m1_m1", "n:Lm0:-4"},
    {"oo_m1_m1", "n:Lm0:4"},
    {"oo_m1_m1", "n:Lm2:-3"},
    {"oo_m1_m3", "e:L-1:Lm3:Lm4"},
    {"oo_m1_m3", "e:L-1:Lm5:Lm0"},
    {"oo_m1_m3", "e:L-1:Rm1:R-3"},
    {"oo_m1_m3", "e:L-1:Rm1:Rm2"},
    {"oo_m1_m3", "e:L-2:Lm0:Lm1"},
    {"oo_m1_m3", "e:L-2:Lm4:Lm5"},
    {"oo_m1_m3", "e:L-2:R-1:c"},
    {"oo_m1_m3", "e:L-2:Rm0:Rm1"},
    {"oo_m1_m3", "e:L-2:Rm3:Rm4"},
    {"oo_m1_m3", "e:L-2:c:L1"},
    {"oo_m1_m3", "e:L-3:R-3:R-2"},
    {"oo_m1_m3", "e:L-3:R1:R2"},
    {"oo_m1_m3", "e:L-3:Rm0:Rm1"},
    {"oo_m1_m3", "e:L-3:Rm3:Rm4"},
    {"oo_m1_m3", "e:L1:L-1:c"},
    {"oo_m1_m3", "e:L1:L2:L3"},
    {"oo_m1_m3", "e:L1:Lm3:Lm4"},
    {"oo_m1_m3", "e:L1:Rm0:Rm1"},
    {"oo_m1_m3", "e:L1:Rm2:Rm3"},
    {"oo_m1_m3", "e:L1:Rm4:Rm5"},
    {"oo_m1_m3", "e:L2:Lm4:Lm5"},
    {"oo_m1_m3", "e:L2:R3:Rm0"},
    {"oo_m1_m3", "e:L2:Rm2:Rm3"},
    {"oo_m1_m3", "e:L2:c:R1"},
    {"oo_m1_m3", "e:L3:R-3:R-2"},
    {"oo_m1_m3", "e:L3:R1:R2"},
    {"oo_m1_m3", "e:L3:R3:Rm0"},
    {"oo_m1_m3", "e:L3:Rm5:Rm0"},
    {"oo_m1_m3", "e:Lm0:L2:L3"},
    {"oo_m1_m3", "e:Lm0:Lm2:Lm3"},
    {"oo_m1_m3", "e:Lm0:R-3:R-2"},
    {"oo_m1_m3", "e:Lm0:Rm0:Rm1"},
    {"oo_m1_m3", "e:Lm0:Rm3:Rm4"},
    {"oo_m1_m3", "e:Lm0:c:R1"},
    {"oo_m1_m3", "e:Lm1:L-1:c"},
    {"oo_m1_m3", "e:Lm1:Lm0:Lm1"},
    {"oo_m1_m3", "e:Lm1:Lm3:Lm4"},
    {"oo_m1_m3", "e:Lm1:R-1:c"},
    {"oo_m1_m3", "e:Lm1:R2:R3"},
    {"oo_m1_m3", "e:Lm1:Rm3:Rm4"},
    {"oo_m1_m3", "e:Lm1:c:R1"},
    {"oo_m1_m3", "e:Lm2:Lm5:L-3"},
    {"oo_m1_m3", "e:Lm2:R-2:R-1"},
    {"oo_m1_m3", "e:Lm2:Rm2:Rm3"},
    {"oo_m1_m3", "e:Lm2:Rm4:Rm5"},
    {"oo_m1_m3", "e:Lm3:R2:R3"},
    {"oo_m1_m3", "e:Lm4:Lm4:Lm5"},
    {"oo_m1_m3", "e:Lm4:R1:R2"},
    {"oo_m1_m3", "e:Lm4:Rm0:Rm1"},
    {"oo_m1_m3", "e:Lm4:Rm3:Rm4"},
    {"oo_m1_m3", "e:Lm5:R-3:R-2"},
    {"oo_m1_m3", "e:R-1:L-1:c"},
    {"oo_m1_m3", "e:R-1:R2:R3"},
    {"oo_m1_m3", "e:R-1:Rm0:Rm1"},
    {"oo_m1_m3", "e:R-1:Rm2:Rm3"},
    {"oo_m1_m3", "e:R-2:Rm0:Rm1"},
    {"oo_m1_m3", "e:R-2:Rm3:Rm4"},
    {"oo_m1_m3", "e:R-3:R2:R3"},
    {"oo_m1_m3", "e:R-3:Rm0:Rm1"},
    {"oo_m1_m3", "e:R-3:Rm3:Rm4"},
    {"oo_m1_m3", "e:R-3:c:L1"},
    {"oo_m1_m3", "e:R1:R3:Rm0"},
    {"oo_m1_m3", "e:R1:Rm1:Rm2"},
    {"oo_m1_m3", "e:R1:Rm3:Rm4"},
    {"oo_m1_m3", "e:R1:Rm5:Rm0"},
    {"oo_m1_m3", "e:R2:L-1:c"},
    {"oo_m1_m3", "e:R2:Rm0:Rm1"},
    {"oo_m1_m3", "e:R2:Rm3:Rm4"},
    {"oo_m1_m3", "e:R3:Rm0:Rm1"},
    {"oo_m1_m3", "e:R3:Rm3:Rm4"},
    {"oo_m1_m3", "e:Rm0:L-1:c"},
    {"oo_m1_m3", "e:Rm0:Lm0:Lm1"},
    {"oo_m1_m3", "e:Rm0:Lm3:Lm4"},
    {"oo_m1_m3", "e:Rm0:R2:R3"},
    {"oo_m1_m3", "e:Rm0:Rm1:Rm2"},
    {"oo_m1_m3", "e:Rm0:Rm4:Rm5"},
    {"oo_m1_m3", "e:Rm1:Rm2:Rm3"},
    {"oo_m1_m3", "e:Rm1:Rm5:Rm0"},
    {"oo_m1_m3", "e:Rm2:Rm0:Rm1"},
    {"oo_m1_m3", "e:Rm2:Rm3:Rm4"},
    {"oo_m1_m3", "e:Rm3:Rm4:Rm5"},
    {"oo_m1_m3", "n:Lm0:2"},
    {"oo_m1_m3", "n:Lm1:-4"},
    {"oo_m1_m3", "n:Lm1:2"},
    {"oo_m1_m3", "n:Lm2:3"},
    {"oo_m1_m5", "e:L-1:L-3:L-2"},
    {"oo_m1_m5", "e:L-1:L1:L2"},
    {"oo_m1_m5", "e:L-1:R-3:R-2"},
    {"oo_m1_m5", "e:L-1:Rm4:Rm5"},
    {"oo_m1_m5", "e:L-2:Lm0:Lm1"},
    {"oo_m1_m5", "e:L-2:Lm3:Lm4"},
    {"oo_m1_m5", "e:L-2:R-1:c"},
    {"oo_m1_m5", "e:L-2:Rm2:Rm3"},
    {"oo_m1_m5", "e:L-2:c:L1"},
    {"oo_m1_m5", "e:L-3:L-1:c"},
    {"oo_m1_m5", "e:L-3:Lm2:Lm3"},
    {"oo_m1_m5", "e:L-3:R-3:R-2"},
    {"oo_m1_m5", "e:L-3:Rm2:Rm3"},
    {"oo_m1_m5", "e:L-3:Rm5:Rm0"},
    {"oo_m1_m5", "e:L-3:c:L1"},
    {"oo_m1_m5", "e:L-3:c:R1"},
    {"oo_m1_m5", "e:L1:Lm0:Lm1"},
    {"oo_m1_m5", "e:L1:Lm3:Lm4"},
    {"oo_m1_m5", "e:L1:R-3:R-2"},
    {"oo_m1_m5", "e:L1:Rm1:Rm2"},
    {"oo_m1_m5", "e:L1:Rm4:Rm5"},
    {"oo_m1_m5", "e:L2:Lm4:Lm5"},
    {"oo_m1_m5", "e:L2:R-2:R-1"},
    {"oo_m1_m5", "e:L2:Rm2:Rm3"},
    {"oo_m1_m5", "e:L3:Rm2:Rm3"},
    {"oo_m1_m5", "e:L3:Rm5:Rm0"},
    {"oo_m1_m5", "e:Lm0:L1:L2"},
    {"oo_m1_m5", "e:Lm0:Lm2:Lm3"},
    {"oo_m1_m5", "e:Lm0:R1:R2"},
    {"oo_m1_m5", "e:Lm0:R3:Rm0"},
    {"oo_m1_m5", "e:Lm0:Rm5:Rm0"},
    {"oo_m1_m5", "e:Lm1:L-1:c"},
    {"oo_m1_m5", "e:Lm1:Lm0:Lm1"},
    {"oo_m1_m5", "e:Lm1:Lm3:Lm4"},
    {"oo_m1_m5", "e:Lm1:R-1:c"},
    {"oo_m1_m5", "e:Lm1:Rm0:Rm1"},
    {"oo_m1_m5", "e:Lm1:Rm3:R-3"},
    {"oo_m1_m5", "e:Lm1:Rm3:Rm4"},
    {"oo_m1_m5", "e:Lm2:R-2:R-1"},
    {"oo_m1_m5", "e:Lm3:R3:Rm0"},
    {"oo_m1_m5", "e:Lm3:Rm5:Rm0"},
    {"oo_m1_m5", "e:Lm4:Lm4:Lm5"},
    {"oo_m1_m5", "e:Lm4:R1:R2"},
    {"oo_m1_m5", "e:Lm4:Rm3:R-3"},
    {"oo_m1_m5", "e:Lm4:Rm3:Rm4"},
    {"oo_m1_m5", "e:Lm5:R3:Rm0"},
    {"oo_m1_m5", "e:Lm5:Rm3:Rm4"},
    {"oo_m1_m5", "e:Lm5:Rm5:Rm0"},
    {"oo_m1_m5", "e:R-1:R2:R3"},
    {"oo_m1_m5", "e:R-1:Rm2:Rm3"},
    {"oo_m1_m5", "e:R-1:Rm4:Rm5"},
    {"oo_m1_m5", "e:R-2:L2:L3"},
    {"oo_m1_m5", "e:R-2:Rm0:Rm1"},
    {"oo_m1_m5", "e:R-2:Rm3:Rm4"},
    {"oo_m1_m5", "e:R-3:Lm4:Lm5"},
    {"oo_m1_m5", "e:R-3:R2:R3"},
    {"oo_m1_m5", "e:R1:R2:R3"},
    {"oo_m1_m5", "e:R1:Rm1:Rm2"},
    {"oo_m1_m5", "e:R2:L-1:c"},
    {"oo_m1_m5", "e:R2:Rm0:Rm1"},
    {"oo_m1_m5", "e:R2:Rm3:Rm4"},
    {"oo_m1_m5", "e:R2:c:L1"},
    {"oo_m1_m5", "e:R3:Rm0:Rm1"},
    {"oo_m1_m5", "e:Rm0:L-1:c"},
    {"oo_m1_m5", "e:Rm0:L3:Lm0"},
    {"oo_m1_m5", "e:Rm0:Rm1:Rm2"},
    {"oo_m1_m5", "e:Rm0:Rm4:Rm5"},
    {"oo_m1_m5", "e:Rm1:R-1:c"},
    {"oo_m1_m5", "e:Rm1:Rm2:Rm3"},
    {"oo_m1_m5", "e:Rm1:Rm5:Rm0"},
    {"oo_m1_m5", "e:Rm2:Lm4:Lm5"},
    {"oo_m1_m5", "e:Rm2:Rm0:Rm1"},
    {"oo_m1_m5", "e:Rm2:Rm3:Rm4"},
    {"oo_m1_m5", "e:Rm3:Lm1:Lm2"},
    {"oo_m1_m5", "e:Rm3:Rm4:Rm5"},
    {"oo_m1_m5", "e:Rm4:L-1:c"},
    {"oo_m1_m5", "e:Rm4:c:L1"},
    {"oo_m1_m5", "n:Lm0:-4"},
    {"oo_m1_m5", "n:Lm0:2"},
    {"oo_m1_m5", "n:Lm1:-4"},
    {"oo_m1_m5", "n:Lm1:2"},
    {"oo_m3_m1", "e:L-1:R-1:c"},
    {"oo_m3_m1", "e:L-1:R2:R3"},
    {"oo_m3_m1", "e:L-1:c:R1"},
    {"oo_m3_m1", "e:L-2:L3:Lm0"},
    {"oo_m3_m1", "e:L-2:Lm1:Lm2"},
    {"oo_m3_m1", "e:L-2:Lm3:Lm4"},
    {"oo_m3_m1", "e:L-2:R-2:R-1"},
    {"oo_m3_m1", "e:L-2:R2:R3"},
    {"oo_m3_m1", "e:L-2:Rm1:Rm2"},
    {"oo_m3_m1", "e:L-2:Rm4:Rm5"},
    {"oo_m3_m1", "e:L-3:R-1:c"},
    {"oo_m3_m1", "e:L-3:R3:Rm0"},
    {"oo_m3_m1", "e:L-3:Rm5:R-3"},
    {"oo_m3_m1", "e:L1:L-1:c"},
    {"oo_m3_m1", "e:L1:L2:L3"},
    {"oo_m3_m1", "e:L1:Lm1:L-3"},
    {"oo_m3_m1", "e:L1:Lm1:Lm2"},
    {"oo_m3_m1", "e:L1:Lm4:Lm5"},
    {"oo_m3_m1", "e:L1:R-1:c"},
    {"oo_m3_m1", "e:L1:R2:R3"},
    {"oo_m3_m1", "e:L1:Rm1:Rm2"},
    {"oo_m3_m1", "e:L1:Rm4:Rm5"},
    {"oo_m3_m1", "e:L1:c:R1"},
    {"oo_m3_m1", "e:L2:Lm3:Lm4"},
    {"oo_m3_m1", "e:L2:Lm5:Lm0"},
    {"oo_m3_m1", "e:L2:R-3:R-2"},
    {"oo_m3_m1", "e:L3:Lm2:Lm3"},
    {"oo_m3_m1", "e:L3:Rm1:Rm2"},
    {"oo_m3_m1", "e:L3:Rm4:Rm5"},
    {"oo_m3_m1", "e:Lm0:L-2:L-1"},
    {"oo_m3_m1", "e:Lm0:Lm1:Lm2"},
    {"oo_m3_m1", "e:Lm0:Lm3:Lm4"},
    {"oo_m3_m1", "e:Lm0:R2:R3"},
    {"oo_m3_m1", "e:Lm0:Rm4:Rm5"},
    {"oo_m3_m1", "e:Lm1:L3:Lm0"},
    {"oo_m3_m1", "e:Lm1:R-2:R-1"},
    {"oo_m3_m1", "e:Lm1:R1:R2"},
    {"oo_m3_m1", "e:Lm1:Rm3:Rm4"},
    {"oo_m3_m1", "e:Lm1:Rm5:R-3"},
    {"oo_m3_m1", "e:Lm1:Rm5:Rm0"},
    {"oo_m3_m1", "e:Lm2:Lm2:Lm3"},
    {"oo_m3_m1", "e:Lm2:Lm5:Lm0"},
    {"oo_m3_m1", "e:Lm2:R3:Rm0"},
    {"oo_m3_m1", "e:Lm3:Lm2:Lm3"},
    {"oo_m3_m1", "e:Lm3:R-2:R-1"},
    {"oo_m3_m1", "e:Lm3:Rm1:Rm2"},
    {"oo_m3_m1", "e:Lm3:Rm4:Rm5"},
    {"oo_m3_m1", "e:Lm4:R2:R3"},
    {"oo_m3_m1", "e:Lm4:Rm4:Rm5"},
    {"oo_m3_m1", "e:Lm5:Lm4:Lm5"},
    {"oo_m3_m1", "e:Lm5:Rm1:Rm2"},
    {"oo_m3_m1", "e:Lm5:Rm4:Rm5"},
    {"oo_m3_m1", "e:R-1:Rm0:Rm1"},
    {"oo_m3_m1", "e:R-1:Rm3:Rm4"},
    {"oo_m3_m1", "e:R-2:R3:Rm0"},
    {"oo_m3_m1", "e:R-2:Rm2:Rm3"},
    {"oo_m3_m1", "e:R-2:Rm5:Rm0"},
    {"oo_m3_m1", "e:R-3:R2:R3"},
    {"oo_m3_m1", "e:R-3:Rm1:Rm2"},
    {"oo_m3_m1", "e:R-3:Rm4:Rm5"},
    {"oo_m3_m1", "e:R1:Rm0:Rm1"},
    {"oo_m3_m1", "e:R2:R3:Rm0"},
    {"oo_m3_m1", "e:R2:Rm5:Rm0"},
    {"oo_m3_m1", "e:R3:Rm0:Rm1"},
    {"oo_m3_m1", "e:Rm0:Rm1:Rm2"},
    {"oo_m3_m1", "e:Rm1:L-1:c"},
    {"oo_m3_m1", "e:Rm1:L1:L2"},
    {"oo_m3_m1", "e:Rm1:Lm5:Lm0"},
    {"oo_m3_m1", "e:Rm1:Rm2:Rm3"},
    {"oo_m3_m1", "e:Rm2:Rm3:Rm4"},
    {"oo_m3_m1", "e:Rm3:Rm4:Rm5"},
    {"oo_m3_m1", "e:Rm4:L-2:L-1"},
    {"oo_m3_m1", "e:Rm4:Rm5:Rm0"},
    {"oo_m3_m1", "e:Rm5:Rm0:Rm1"},
    {"oo_m3_m1", "n:Lm0:1"},
    {"oo_m3_m1", "n:Lm0:3"},
    {"oo_m3_m1", "n:Lm1:-4"},
    {"oo_m3_m1", "n:Lm1:4"},
    {"oo_m3_m3", "e:L-1:Lm0:Lm1"},
    {"oo_m3_m3", "e:L-1:Lm3:Lm4"},
    {"oo_m3_m3", "e:L-1:R-2:R-1"},
    {"oo_m3_m3", "e:L-1:R2:R3"},
    {"oo_m3_m3", "e:L-1:Rm1:Rm2"},
    {"oo_m3_m3", "e:L-1:Rm4:Rm5"},
    {"oo_m3_m3", "e:L-2:Lm2:Lm3"},
    {"oo_m3_m3", "e:L-2:Lm5:Lm0"},
    {"oo_m3_m3", "e:L-2:R-1:c"},
    {"oo_m3_m3", "e:L-2:R2:R3"},
    {"oo_m3_m3", "e:L-2:Rm4:Rm5"},
    {"oo_m3_m3", "e:L-3:L3:Lm0"},
    {"oo_m3_m3", "e:L-3:Lm5:Lm0"},
    {"oo_m3_m3", "e:L-3:R-2:R-1"},
    {"oo_m3_m3", "e:L-3:R3:Rm0"},
    {"oo_m3_m3", "e:L-3:Rm2:Rm3"},
    {"oo_m3_m3", "e:L-3:Rm5:Rm0"},
    {"oo_m3_m3", "e:L1:L3:Lm0"},
    {"oo_m3_m3", "e:L1:Lm1:Lm2"},
    {"oo_m3_m3", "e:L1:Rm1:R-3"},
    {"oo_m3_m3", "e:L1:Rm1:Rm2"},
    {"oo_m3_m3", "e:L1:Rm4:Rm5"},
    {"oo_m3_m3", "e:L1:c:R1"},
    {"oo_m3_m3", "e:L2:Lm0:Lm1"},
    {"oo_m3_m3", "e:L2:Lm2:Lm3"},
    {"oo_m3_m3", "e:L2:R1:R2"},
    {"oo_m3_m3", "e:L2:Rm0:Rm1"},
    {"oo_m3_m3", "e:L2:Rm4:Rm5"},
    {"oo_m3_m3", "e:L3:Lm1:Lm2"},
    {"oo_m3_m3", "e:L3:Rm0:Rm1"},
    {"oo_m3_m3", "e:Lm0:L-2:L-1"},
    {"oo_m3_m3", "e:Lm0:L1:L2"},
    {"oo_m3_m3", "e:Lm0:Lm1:Lm2"},
    {"oo_m3_m3", "e:Lm0:Lm4:Lm5"},
    {"oo_m3_m3", "e:Lm0:Rm0:Rm1"},
    {"oo_m3_m3", "e:Lm0:Rm3:Rm4"},
    {"oo_m3_m3", "e:Lm1:Lm2:Lm3"},
    {"oo_m3_m3", "e:Lm1:Lm5:Lm0"},
    {"oo_m3_m3", "e:Lm1:R1:R2"},
    {"oo_m3_m3", "e:Lm1:Rm0:Rm1"},
    {"oo_m3_m3", "e:Lm1:Rm2:Rm3"},
    {"oo_m3_m3", "e:Lm2:Lm0:Lm1"},
    {"oo_m3_m3", "e:Lm2:Lm3:Lm4"},
    {"oo_m3_m3", "e:Lm2:R3:Rm0"},
    {"oo_m3_m3", "e:Lm3:Lm4:Lm5"},
    {"oo_m3_m3", "e:Lm3:R-3:R-2"},
    {"oo_m3_m3", "e:Lm3:R1:R2"},
    {"oo_m3_m3", "e:Lm3:Rm2:Rm3"},
    {"oo_m3_m3", "e:Lm3:Rm5:Rm0"},
    {"oo_m3_m3", "e:Lm4:L3:Lm0"},
    {"oo_m3_m3", "e:Lm4:Rm0:Rm1"},
    {"oo_m3_m3", "e:R-2:R1:R2"},
    {"oo_m3_m3", "e:R-2:R3:Rm0"},
    {"oo_m3_m3", "e:R-2:Rm5:Rm0"},
    {"oo_m3_m3", "e:R1:R2:R3"},
    {"oo_m3_m3", "e:R1:Rm0:Rm1"},
    {"oo_m3_m3", "e:R1:Rm3:Rm4"},
    {"oo_m3_m3", "e:R2:Rm0:Rm1"},
    {"oo_m3_m3", "e:R2:Rm4:Rm5"},
    {"oo_m3_m3", "e:R3:R-1:c"},
    {"oo_m3_m3", "e:Rm0:Rm2:Rm3"},
    {"oo_m3_m3", "e:Rm1:R-2:R-1"},
    {"oo_m3_m3", "e:Rm1:Rm0:Rm1"},
    {"oo_m3_m3", "e:Rm1:Rm3:Rm4"},
    {"oo_m3_m3", "e:Rm4:Rm4:Rm5"},
    {"oo_m3_m3", "n:Rm0:-4"},
    {"oo_m3_m3", "n:Rm0:2"},
    {"oo_m3_m3", "n:Rm1:-4"},
    {"oo_m3_m3", "n:Rm1:2"},
    {"oo_m3_m5", "e:L-1:L1:L2"},
    {"oo_m3_m5", "e:L-1:Rm0:Rm1"},
    {"oo_m3_m5", "e:L-2:Lm2:Lm3"},
    {"oo_m3_m5", "e:L-2:Lm4:Lm5"},
    {"oo_m3_m5", "e:L-2:R-1:c"},
    {"oo_m3_m5", "e:L-2:Rm1:Rm2"},
    {"oo_m3_m5", "e:L-2:Rm4:Rm5"},
    {"oo_m3_m5", "e:L-3:L-1:c"},
    {"oo_m3_m5", "e:L-3:Lm3:Lm4"},
    {"oo_m3_m5", "e:L-3:Lm5:Lm0"},
    {"oo_m3_m5", "e:L-3:R-3:R-2"},
    {"oo_m3_m5", "e:L-3:R3:Rm0"},
    {"oo_m3_m5", "e:L-3:Rm1:Rm2"},
    {"oo_m3_m5", "e:L-3:Rm5:Rm0"},
    {"oo_m3_m5", "e:L-3:c:R1"},
    {"oo_m3_m5", "e:L1:Lm2:Lm3"},
    {"oo_m3_m5", "e:L1:Rm2:Rm3"},
    {"oo_m3_m5", "e:L2:Lm0:Lm1"},
    {"oo_m3_m5", "e:L2:Lm3:Lm4"},
    {"oo_m3_m5", "e:L2:Rm3:R-3"},
    {"oo_m3_m5", "e:L2:Rm3:Rm4"},
    {"oo_m3_m5", "e:L3:Lm0:Lm1"},
    {"oo_m3_m5", "e:L3:R3:Rm0"},
    {"oo_m3_m5", "e:L3:Rm3:R-3"},
    {"oo_m3_m5", "e:L3:Rm3:Rm4"},
    {"oo_m3_m5", "e:L3:Rm5:Rm0"},
    {"oo_m3_m5", "e:L3:c:R1"},
    {"oo_m3_m5", "e:Lm0:L-1:c"},
    {"oo_m3_m5", "e:Lm0:L2:L3"},
    {"oo_m3_m5", "e:Lm0:Lm1:Lm2"},
    {"oo_m3_m5", "e:Lm0:Lm4:Lm5"},
    {"oo_m3_m5", "e:Lm0:Rm1:Rm2"},
    {"oo_m3_m5", "e:Lm0:Rm3:R-3"},
    {"oo_m3_m5", "e:Lm0:Rm3:Rm4"},
    {"oo_m3_m5", "e:Lm1:L1:L2"},
    {"oo_m3_m5", "e:Lm1:Lm2:Lm3"},
    {"oo_m3_m5", "e:Lm1:Lm5:Lm0"},
    {"oo_m3_m5", "e:Lm1:R3:Rm0"},
    {"oo_m3_m5", "e:Lm1:Rm3:R-3"},
    {"oo_m3_m5", "e:Lm1:Rm3:Rm4"},
    {"oo_m3_m5", "e:Lm2:Lm0:Lm1"},
    {"oo_m3_m5", "e:Lm2:Lm3:Lm4"},
    {"oo_m3_m5", "e:Lm2:R-1:c"},
    {"oo_m3_m5", "e:Lm2:R3:Rm0"},
    {"oo_m3_m5", "e:Lm2:Rm1:Rm2"},
    {"oo_m3_m5", "e:Lm2:Rm5:Rm0"},
    {"oo_m3_m5", "e:Lm2:c:R1"},
    {"oo_m3_m5", "e:Lm3:Lm4:Lm5"},
    {"oo_m3_m5", "e:Lm3:Rm2:Rm3"},
    {"oo_m3_m5", "e:Lm4:R-1:c"},
    {"oo_m3_m5", "e:Lm4:Rm0:Rm1"},
    {"oo_m3_m5", "e:Lm4:c:R1"},
    {"oo_m3_m5", "e:Lm5:Rm1:Rm2"},
    {"oo_m3_m5", "e:Lm5:Rm4:Rm5"},
    {"oo_m3_m5", "e:R-1:Rm1:Rm2"},
    {"oo_m3_m5", "e:R-1:Rm3:R-3"},
    {"oo_m3_m5", "e:R-1:Rm3:Rm4"},
    {"oo_m3_m5", "e:R-2:Lm0:Lm1"},
    {"oo_m3_m5", "e:R-2:Rm0:Rm1"},
    {"oo_m3_m5", "e:R-3:Lm3:Lm4"},
    {"oo_m3_m5", "e:R-3:R3:Rm0"},
    {"oo_m3_m5", "e:R-3:Rm2:Rm3"},
    {"oo_m3_m5", "e:R-3:Rm5:Rm0"},
    {"oo_m3_m5", "e:R-3:c:R1"},
    {"oo_m3_m5", "e:R1:Rm2:Rm3"},
    {"oo_m3_m5", "e:R2:Lm4:Lm5"},
    {"oo_m3_m5", "e:R2:R-1:c"},
    {"oo_m3_m5", "e:R2:Rm0:Rm1"},
    {"oo_m3_m5", "e:R3:L-1:c"},
    {"oo_m3_m5", "e:Rm0:Rm0:Rm1"},
    {"oo_m3_m5", "e:Rm0:Rm3:Rm4"},
    {"oo_m3_m5", "e:Rm1:L-2:L-1"},
    {"oo_m3_m5", "e:Rm1:Rm4:Rm5"},
    {"oo_m3_m5", "e:Rm2:Rm2:Rm3"},
    {"oo_m3_m5", "n:Rm0:-3"},
    {"oo_m3_m5", "n:Rm0:3"},
    {"oo_m3_m5", "n:Rm1:-3"},
    {"oo_m3_m5", "n:Rm1:3"},
    {"oo_m5_m1", "e:L-1:L-3:L-2"},
    {"oo_m5_m1", "e:L-1:R-1:c"},
    {"oo_m5_m1", "e:L-1:Rm2:Rm3"},
    {"oo_m5_m1", "e:L-1:Rm4:Rm5"},
    {"oo_m5_m1", "e:L-2:L1:L2"},
    {"oo_m5_m1", "e:L-2:Lm0:Lm1"},
    {"oo_m5_m1", "e:L-2:Lm3:L-3"},
    {"oo_m5_m1", "e:L-2:R-1:c"},
    {"oo_m5_m1", "e:L-2:R-3:R-2"},
    {"oo_m5_m1", "e:L-2:R2:R3"},
    {"oo_m5_m1", "e:L-2:Rm1:Rm2"},
    {"oo_m5_m1", "e:L-2:Rm4:Rm5"},
    {"oo_m5_m1", "e:L-3:L2:L3"},
    {"oo_m5_m1", "e:L-3:Rm2:Rm3"},
    {"oo_m5_m1", "e:L1:L3:Lm0"},
    {"oo_m5_m1", "e:L1:Lm2:Lm3"},
    {"oo_m5_m1", "e:L1:Lm5:Lm0"},
    {"oo_m5_m1", "e:L1:R3:Rm0"},
    {"oo_m5_m1", "e:L1:Rm1:Rm2"},
    {"oo_m5_m1", "e:L1:Rm5:R-3"},
    {"oo_m5_m1", "e:L2:L3:Lm0"},
    {"oo_m5_m1", "e:L2:Lm2:Lm3"},
    {"oo_m5_m1", "e:L2:Lm5:Lm0"},
    {"oo_m5_m1", "e:L2:R-3:R-2"},
    {"oo_m5_m1", "e:L2:Rm3:Rm4"},
    {"oo_m5_m1", "e:L3:Lm1:Lm2"},
    {"oo_m5_m1", "e:L3:Lm3:Lm4"},
    {"oo_m5_m1", "e:L3:Rm4:Rm5"},
    {"oo_m5_m1", "e:Lm0:Lm1:Lm2"},
    {"oo_m5_m1", "e:Lm0:Lm4:Lm5"},
    {"oo_m5_m1", "e:Lm0:R-2:R-1"},
    {"oo_m5_m1", "e:Lm0:Rm1:Rm2"},
    {"oo_m5_m1", "e:Lm0:Rm4:Rm5"},
    {"oo_m5_m1", "e:Lm1:Lm2:Lm3"},
    {"oo_m5_m1", "e:Lm1:Lm5:Lm0"},
    {"oo_m5_m1", "e:Lm2:Lm0:Lm1"},
    {"oo_m5_m1", "e:Lm2:Lm3:Lm4"},
    {"oo_m5_m1", "e:Lm2:R-2:R-1"},
    {"oo_m5_m1", "e:Lm2:Rm1:Rm2"},
    {"oo_m5_m1", "e:Lm2:Rm4:Rm5"},
    {"oo_m5_m1", "e:Lm3:Lm4:Lm5"},
    {"oo_m5_m1", "e:Lm3:R1:R2"},
    {"oo_m5_m1", "e:Lm3:Rm0:Rm1"},
    {"oo_m5_m1", "e:Lm3:Rm3:Rm4"},
    {"oo_m5_m1", "e:Lm4:R-1:c"},
    {"oo_m5_m1", "e:Lm4:R-3:R-2"},
    {"oo_m5_m1", "e:R-1:Rm0:Rm1"},
    {"oo_m5_m1", "e:R-1:Rm4:Rm5"},
    {"oo_m5_m1", "e:R-2:R3:Rm0"},
    {"oo_m5_m1", "e:R-2:Rm2:Rm3"},
    {"oo_m5_m1", "e:R-2:Rm5:R-3"},
    {"oo_m5_m1", "e:R-2:Rm5:Rm0"},
    {"oo_m5_m1", "e:R-3:R1:R2"},
    {"oo_m5_m1", "e:R-3:Rm0:Rm1"},
    {"oo_m5_m1", "e:R1:Lm3:Lm4"},
    {"oo_m5_m1", "e:R1:Rm4:Rm5"},
    {"oo_m5_m1", "e:R2:Lm0:Lm1"},
    {"oo_m5_m1", "e:R2:Rm0:Rm1"},
    {"oo_m5_m1", "e:R3:Rm1:Rm2"},
    {"oo_m5_m1", "e:Rm0:R1:R2"},
    {"oo_m5_m1", "e:Rm0:Rm1:Rm2"},
    {"oo_m5_m1", "e:Rm0:Rm4:Rm5"},
    {"oo_m5_m1", "e:Rm1:L-1:c"},
    {"oo_m5_m1", "e:Rm1:Rm2:Rm3"},
    {"oo_m5_m1", "e:Rm1:Rm5:Rm0"},
    {"oo_m5_m1", "e:Rm2:R-1:c"},
    {"oo_m5_m1", "e:Rm2:R2:R3"},
    {"oo_m5_m1", "e:Rm2:Rm0:Rm1"},
    {"oo_m5_m1", "e:Rm2:Rm3:Rm4"},
    {"oo_m5_m1", "e:Rm3:Rm4:Rm5"},
    {"oo_m5_m1", "e:Rm4:R3:Rm0"},
    {"oo_m5_m3", "e:L-1:Lm0:Lm1"},
    {"oo_m5_m3", "e:L-1:Lm3:L-3"},
    {"oo_m5_m3", "e:L-1:Lm3:Lm4"},
    {"oo_m5_m3", "e:L-1:R-1:c"},
    {"oo_m5_m3", "e:L-1:Rm0:Rm1"},
    {"oo_m5_m3", "e:L-1:c:R1"},
    {"oo_m5_m3", "e:L-2:R1:R2"},
    {"oo_m5_m3", "e:L-2:Rm3:Rm4"},
    {"oo_m5_m3", "e:L-2:Rm5:Rm0"},
    {"oo_m5_m3", "e:L-3:L3:Lm0"},
    {"oo_m5_m3", "e:L-3:Lm2:Lm3"},
    {"oo_m5_m3", "e:L-3:Lm5:Lm0"},
    {"oo_m5_m3", "e:L-3:R-2:R-1"},
    {"oo_m5_m3", "e:L-3:R3:Rm0"},
    {"oo_m5_m3", "e:L-3:Rm3:Rm4"},
    {"oo_m5_m3", "e:L-3:Rm5:Rm0"},
    {"oo_m5_m3", "e:L1:L-2:L-1"},
    {"oo_m5_m3", "e:L1:Lm1:Lm2"},
    {"oo_m5_m3", "e:L1:R3:Rm0"},
    {"oo_m5_m3", "e:L1:Rm2:Rm3"},
    {"oo_m5_m3", "e:L1:Rm5:Rm0"},
    {"oo_m5_m3", "e:L2:L-1:c"},
    {"oo_m5_m3", "e:L2:Lm4:Lm5"},
    {"oo_m5_m3", "e:L2:R-3:R-2"},
    {"oo_m5_m3", "e:L2:Rm0:Rm1"},
    {"oo_m5_m3", "e:L2:c:R1"},
    {"oo_m5_m3", "e:L3:Lm1:Lm2"},
    {"oo_m5_m3", "e:L3:R3:Rm0"},
    {"oo_m5_m3", "e:L3:Rm5:Rm0"},
    {"oo_m5_m3", "e:Lm0:L1:L2"},
    {"oo_m5_m3", "e:Lm0:Lm0:Lm1"},
    {"oo_m5_m3", "e:Lm0:Lm3:L-3"},
    {"oo_m5_m3", "e:Lm0:Lm3:Lm4"},
    {"oo_m5_m3", "e:Lm0:R-3:R-2"},
    {"oo_m5_m3", "e:Lm0:R1:R2"},
    {"oo_m5_m3", "e:Lm0:Rm0:Rm1"},
    {"oo_m5_m3", "e:Lm1:Lm4:Lm5"},
    {"oo_m5_m3", "e:Lm1:R-3:R-2"},
    {"oo_m5_m3", "e:Lm1:R1:R2"},
    {"oo_m5_m3", "e:Lm2:Lm2:Lm3"},
    {"oo_m5_m3", "e:Lm2:R-1:c"},
    {"oo_m5_m3", "e:Lm2:R-3:R-2"},
    {"oo_m5_m3", "e:Lm2:Rm3:Rm4"},
    {"oo_m5_m3", "e:Lm2:c:R1"},
    {"oo_m5_m3", "e:Lm3:R-1:c"},
    {"oo_m5_m3", "e:Lm3:Rm1:R-3"},
    {"oo_m5_m3", "e:Lm3:Rm1:Rm2"},
    {"oo_m5_m3", "e:Lm4:Rm1:Rm2"},
    {"oo_m5_m3", "e:Lm5:Rm2:Rm3"},
    {"oo_m5_m3", "e:Lm5:Rm4:Rm5"},
    {"oo_m5_m3", "e:R-2:R3:Rm0"},
    {"oo_m5_m3", "e:R-2:Rm2:Rm3"},
    {"oo_m5_m3", "e:R-2:Rm5:Rm0"},
    {"oo_m5_m3", "e:R-3:R-1:c"},
    {"oo_m5_m3", "e:R-3:c:R1"},
    {"oo_m5_m3", "e:R1:R3:Rm0"},
    {"oo_m5_m3", "e:R1:Rm3:Rm4"},
    {"oo_m5_m3", "e:R1:Rm5:Rm0"},
    {"oo_m5_m3", "e:R2:Rm4:Rm5"},
    {"oo_m5_m3", "e:R3:Rm0:Rm1"},
    {"oo_m5_m3", "e:Rm0:Lm0:Lm1"},
    {"oo_m5_m3", "e:Rm0:Lm3:Lm4"},
    {"oo_m5_m3", "e:Rm0:R-1:c"},
    {"oo_m5_m3", "e:Rm0:Rm2:Rm3"},
    {"oo_m5_m3", "e:Rm1:Lm3:L-3"},
    {"oo_m5_m3", "e:Rm1:Rm0:Rm1"},
    {"oo_m5_m3", "e:Rm1:Rm3:Rm4"},
    {"oo_m5_m3", "e:Rm2:c:R1"},
    {"oo_m5_m3", "e:Rm3:Lm2:Lm3"},
    {"oo_m5_m3", "e:Rm4:L3:Lm0"},
    {"oo_m5_m3", "e:Rm4:Rm4:Rm5"},
    {"oo_m5_m3", "n:Lm0:-3"},
    {"oo_m5_m3", "n:Lm0:3"},
    {"oo_m5_m3", "n:Lm1:-3"},
    {"oo_m5_m3", "n:Lm1:3"},
    {"oo_m5_m3", "n:Rm0:-4"},
    {"oo_m5_m3", "n:Rm0:2"},
    {"oo_m5_m3", "n:Rm1:-4"},
    {"oo_m5_m3", "n:Rm1:2"},
    {"oo_m5_m5", "e:L-1:L-3:L-2"},
    {"oo_m5_m5", "e:L-1:Lm1:Lm2"},
    {"oo_m5_m5", "e:L-1:Lm4:Lm5"},
    {"oo_m5_m5", "e:L-1:R3:Rm0"},
    {"oo_m5_m5", "e:L-1:Rm2:Rm3"},
    {"oo_m5_m5", "e:L-1:Rm5:Rm0"},
    {"oo_m5_m5", "e:L-1:c:R1"},
    {"oo_m5_m5", "e:L-2:Lm4:Lm5"},
    {"oo_m5_m5", "e:L-2:R-1:c"},
    {"oo_m5_m5", "e:L-2:R2:R3"},
    {"oo_m5_m5", "e:L-2:Rm2:Rm3"},
    {"oo_m5_m5", "e:L-2:c:R1"},
    {"oo_m5_m5", "e:L-3:Lm1:Lm2"},
    {"oo_m5_m5", "e:L-3:R-2:R-1"},
    {"oo_m5_m5", "e:L1:L3:Lm0"},
    {"oo_m5_m5", "e:L1:Lm2:Lm3"},
    {"oo_m5_m5", "e:L1:Lm5:Lm0"},
    {"oo_m5_m5", "e:L1:R-2:R-1"},
    {"oo_m5_m5", "e:L1:Rm5:Rm0"},
    {"oo_m5_m5", "e:L2:Lm2:Lm3"},
    {"oo_m5_m5", "e:L2:R1:R2"},
    {"oo_m5_m5", "e:L2:Rm3:R-3"},
    {"oo_m5_m5", "e:L2:Rm5:Rm0"},
    {"oo_m5_m5", "e:L3:Lm3:Lm4"},
    {"oo_m5_m5", "e:L3:Rm2:Rm3"},
    {"oo_m5_m5", "e:Lm0:L1:L2"},
    {"oo_m5_m5", "e:Lm0:Lm2:Lm3"},
    {"oo_m5_m5", "e:Lm0:R-3:R-2"},
    {"oo_m5_m5", "e:Lm0:R3:Rm0"},
    {"oo_m5_m5", "e:Lm0:Rm2:Rm3"},
    {"oo_m5_m5", "e:Lm0:Rm5:Rm0"},
    {"oo_m5_m5", "e:Lm1:L-2:L-1"},
    {"oo_m5_m5", "e:Lm1:Lm0:Lm1"},
    {"oo_m5_m5", "e:Lm1:Lm3:Lm4"},
    {"oo_m5_m5", "e:Lm1:R-3:R-2"},
    {"oo_m5_m5", "e:Lm2:R-3:R-2"},
    {"oo_m5_m5", "e:Lm2:Rm2:Rm3"},
    {"oo_m5_m5", "e:Lm3:R3:Rm0"},
    {"oo_m5_m5", "e:Lm3:Rm2:Rm3"},
    {"oo_m5_m5", "e:Lm3:Rm5:Rm0"},
    {"oo_m5_m5", "e:Lm4:Lm4:Lm5"},
    {"oo_m5_m5", "e:Lm4:R1:R2"},
    {"oo_m5_m5", "e:R-1:Rm0:Rm1"},
    {"oo_m5_m5", "e:R-1:Rm3:R-3"},
    {"oo_m5_m5", "e:R-1:Rm3:Rm4"},
    {"oo_m5_m5", "e:R-2:L-1:c"},
    {"oo_m5_m5", "e:R-2:Rm1:Rm2"},
    {"oo_m5_m5", "e:R-2:Rm3:Rm4"},
    {"oo_m5_m5", "e:R1:Rm0:Rm1"},
    {"oo_m5_m5", "e:R2:Rm4:Rm5"},
    {"oo_m5_m5", "e:R3:L1:L2"},
    {"oo_m5_m5", "e:R3:Rm1:Rm2"},
    {"oo_m5_m5", "e:R3:Rm4:Rm5"},
    {"oo_m5_m5", "e:Rm0:L-1:c"},
    {"oo_m5_m5", "e:Rm0:Lm0:Lm1"},
    {"oo_m5_m5", "e:Rm0:Lm3:L-3"},
    {"oo_m5_m5", "e:Rm0:Lm3:Lm4"},
    {"oo_m5_m5", "e:Rm0:Rm1:Rm2"},
    {"oo_m5_m5", "e:Rm1:R-2:R-1"},
    {"oo_m5_m5", "e:Rm1:R3:Rm0"},
    {"oo_m5_m5", "e:Rm2:L-2:L-1"},
    {"oo_m5_m5", "e:Rm2:Rm2:Rm3"},
    {"oo_m5_m5", "e:Rm2:Rm5:Rm0"},
    {"oo_m5_m5", "e:Rm3:Lm2:Lm3"},
    {"oo_m5_m5", "e:Rm3:Rm0:Rm1"},
    {"oo_m5_m5", "e:Rm4:L1:L2"},
    {"oo_m5_m5", "e:Rm5:Rm4:Rm5"},
    {"oo_m5_m5", "n:Lm0:-4"},
    {"oo_m5_m5", "n:Lm0:2"},
    {"oo_m5_m5", "n:Lm1:-4"},
    {"oo_m5_m5", "n:Lm1:2"},
    {"oo_m5_m5", "n:Rm0:1"},
    {"oo_m5_m5", "n:Rm0:3"},
    {"oo_m5_m5", "n:Rm1:-4"},
    {"oo_m5_m5", "n:Rm1:4"},
};

}  // namespace otisham::tables
