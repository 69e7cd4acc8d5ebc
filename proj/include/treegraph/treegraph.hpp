#pragma once

// Convenience include for the whole library.

#include "treegraph/color.hpp"
#include "treegraph/decompose.hpp"
#include "treegraph/gen.hpp"
#include "treegraph/graph.hpp"
#include "treegraph/io.hpp"
#include "treegraph/kurepa.hpp"
#include "treegraph/minor.hpp"
#include "treegraph/tree.hpp"
