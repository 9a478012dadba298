// Polynomials and root-indices of phenanthrene's carbon skeleton.

#include <cstdio>

#include "rootix/rootix.hpp"

int main()
{
    using namespace rootix;
    const Graph g = Graph::from_edge_list(14, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {4, 6}, {6, 7},
                                              {7, 8}, {8, 9}, {5, 9}, {6, 10}, {10, 11}, {11, 12}, {12, 13}, {7, 13}});
    for (PolyKind kind : kAllPolyKinds) {
        const Polynomial p = build(g, kind);
        const RootResult r = root_index(p);
        std::printf("%-12s %s\n", std::string(to_string(kind)).c_str(), to_string(p).c_str());
        std::printf("%-12s index %lld, delta %.5f > 1/%lld\n", "", static_cast<long long>(classic_index(p)), r.delta,
                    static_cast<long long>(max_coefficient(p) + 1));
    }
}
