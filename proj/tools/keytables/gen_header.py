"""Writes include/otisham/key_edge_tables.hpp from a family<TAB>key TSV."""
import argparse
import collections

HEADER = """// Generated by tools/keytables/gen_header.py; do not edit.
#pragma once

#include <string_view>

namespace otisham::tables {

struct KeyEdgeRow {
  std::string_view family;
  std::string_view key;
};

inline constexpr KeyEdgeRow kDerivedKeyEdges[] = {
"""

FOOTER = """};

}  // namespace otisham::tables
"""


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("tsv")
    ap.add_argument("out")
    args = ap.parse_args()
    rows = collections.defaultdict(set)
    with open(args.tsv) as f:
        for line in f:
            line = line.strip()
            if line:
                fam, key = line.split("\t")
                rows[fam].add(key)
    with open(args.out, "w") as out:
        out.write(HEADER)
        for fam in sorted(rows):
            for key in sorted(rows[fam]):
                out.write('    {"%s", "%s"},\n' % (fam, key))
        out.write(FOOTER)
    print("%d families, %d rows" % (len(rows), sum(len(v) for v in rows.values())))


if __name__ == "__main__":
    main()
