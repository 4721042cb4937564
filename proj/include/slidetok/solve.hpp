#pragma once

#include <string>

#include "slidetok/graph.hpp"
#include "slidetok/instance.hpp"

namespace slidetok {

enum class ClassSelector { Auto, Proper, TriviallyPerfect, Caterpillar };

// Accepts auto, proper, tp, caterpillar. Throws std::invalid_argument otherwise.
ClassSelector parse_selector(const std::string& name);
const char* to_string(ClassSelector s);

struct SolveOptions {
  ClassSelector selector = ClassSelector::Auto;
  bool decide_only = false;
};

// Picks the solver for the instance. With Auto the order is proper, trivially
// perfect, caterpillar; edge-list input can only be a caterpillar forest.
// Throws SolverError with code UNSUPPORTED_CLASS when nothing applies.
ClassSelector select_solver(const Instance& inst, ClassSelector requested);

// Disconnected inputs are solved per component; a component whose blue and red
// counts differ gives NO COMPONENT_UNBALANCED. Throws SolverError on input errors.
SolveResult solve_instance(const Instance& inst, const SolveOptions& options = {});

}  // namespace slidetok
