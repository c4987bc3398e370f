#include "hfactor/corpus.hpp"

namespace hfactor {

const std::vector<CorpusEntry>& corpus()
{
    static const std::vector<CorpusEntry> entries = {
        {"k2", "single edge",
         "v 2\n"
         "e 0 1\n",
         "d=1;m=1;class=strictly_balanced;balanced=1;s=1"},
        {"k3", "triangle",
         "v 3\n"
         "e 0 1\ne 0 2\ne 1 2\n",
         "d=3/2;m=3/2;class=strictly_balanced;balanced=1;s=3"},
        {"k4", "complete graph on 4 vertices",
         "v 4\n"
         "e 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n",
         "d=2;m=2;class=strictly_balanced;balanced=1;s=6"},
        {"k5", "complete graph on 5 vertices",
         "v 5\n"
         "e 0 1\ne 0 2\ne 0 3\ne 0 4\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n",
         "d=5/2;m=5/2;class=strictly_balanced;balanced=1;s=10"},
        {"path", "path on 4 vertices",
         "v 4\n"
         "e 0 1\ne 1 2\ne 2 3\n",
         "d=1;m=1;class=vertex_balanced_not_strict;balanced=1;s=1"},
        {"tree", "caterpillar tree on 6 vertices",
         "v 6\n"
         "e 0 1\ne 1 2\ne 1 3\ne 3 4\ne 3 5\n",
         "d=1;m=1;class=vertex_balanced_not_strict;balanced=1;s=1"},
        {"k4-k3-link", "K4 with a pendant triangle-like link; not vertex balanced",
         "v 6\n"
         "role 0 K1\nrole 1 K2\nrole 2 K3\nrole 3 K4\nrole 4 T1\nrole 5 T2\n"
         "e 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n"
         "e 4 5\ne 5 1\ne 4 2\n",
         "d=9/5;m=2;class=non_vertex_balanced;balanced=0;s=-"},
        {"triangle-plus-isolated", "triangle and one isolated vertex",
         "v 4\n"
         "e 0 1\ne 0 2\ne 1 2\n",
         "d=1;m=3/2;class=non_vertex_balanced;balanced=0;s=-"},
        {"k5-figure", "K5 joined to a triangle through A1 and a single edge",
         "v 9\n"
         "role 0 K1\nrole 1 K2\nrole 2 K3\nrole 3 K4\nrole 4 K5\n"
         "role 5 A1\nrole 6 T1\nrole 7 T2\nrole 8 T3\n"
         "e 0 1\ne 0 2\ne 0 3\ne 0 4\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n"
         "e 5 2\ne 5 3\ne 5 6\ne 5 8\n"
         "e 6 7\ne 7 8\ne 6 8\n"
         "e 4 7\n",
         "d=9/4;m=5/2;class=non_vertex_balanced;balanced=0;s=-"},
        {"two-triangles-square", "two triangles and two extra vertices closing a 4-cycle",
         "v 8\n"
         "role 0 X12\nrole 1 X32\nrole 2 X23\nrole 3 X41\nrole 4 X61\nrole 5 X52\nrole 6 X73\nrole 7 X72\n"
         "e 0 1\ne 1 2\ne 0 2\n"
         "e 3 4\ne 3 5\ne 4 5\n"
         "e 0 3\ne 2 6\ne 4 7\ne 6 7\n",
         "d=10/7;m=3/2;class=non_vertex_balanced;balanced=0;s=-"},
        {"triangle-two-pendants", "triangle with pendant edges at two of its vertices",
         "v 5\n"
         "e 0 1\ne 0 2\ne 1 2\n"
         "e 0 3\ne 1 4\n",
         "d=5/4;m=3/2;class=non_vertex_balanced;balanced=0;s=-"},
        {"necklace", "four triangles linked in a cycle",
         "v 12\n"
         "role 0 X12\nrole 1 X32\nrole 2 X23\n"
         "role 3 X41\nrole 4 X61\nrole 5 X52\n"
         "role 6 X72\nrole 7 X92\nrole 8 X83\n"
         "role 9 X43\nrole 10 X63\nrole 11 X54\n"
         "e 0 1\ne 1 2\ne 0 2\n"
         "e 3 4\ne 3 5\ne 4 5\n"
         "e 6 7\ne 7 8\ne 6 8\n"
         "e 9 10\ne 10 11\ne 9 11\n"
         "e 0 3\ne 10 8\ne 1 9\ne 4 6\n",
         "d=16/11;m=3/2;class=vertex_balanced_not_strict;balanced=0;s=3"},
        {"house", "triangle sharing an edge with a 4-cycle",
         "v 5\n"
         "role 0 X11\nrole 1 X31\nrole 2 X51\nrole 3 X23\nrole 4 X53\n"
         "e 0 1\ne 3 1\ne 0 3\n"
         "e 3 4\ne 2 1\ne 2 4\n",
         "d=3/2;m=3/2;class=vertex_balanced_not_strict;balanced=1;s=6"},
        {"double-edge", "two roles joined by a double edge",
         "v 2\n"
         "mode multi\n"
         "e 0 1\ne 0 1\n",
         "d=2;m=2;class=strictly_balanced;balanced=1;s=2"},
    };
    return entries;
}

const CorpusEntry& corpus_entry(std::string_view name)
{
    for (const auto& e : corpus())
        if (e.name == name)
            return e;
    throw GraphError("unknown corpus graph '" + std::string(name) + "'");
}

PatternGraph corpus_pattern(std::string_view name)
{
    return parse_pattern(corpus_entry(name).text);
}

}  // namespace hfactor
