#pragma once

#include <fstream>
#include <string>

#include "rootix/graph.hpp"

inline std::string fixture_path(const std::string& name) { return std::string(ROOTIX_TEST_DATA) + "/" + name; }

inline rootix::Graph load_fixture(const std::string& name)
{
    std::ifstream in(fixture_path(name));
    return rootix::read_edge_list(in);
}
