#pragma once

// Small named graphs shared by the test suites.

#include "lpa/graph.hpp"

namespace lpa::fixtures {

// u, v; f: u -> u, g: u -> v. Satisfies condition (L); E/{v} is a bare loop.
inline Graph loop_exit() { return Graph::from_spec({"u", "v"}, {{"f", "u", "u"}, {"g", "u", "v"}}); }

inline Graph edgeless_ab() { return Graph::from_spec({"a", "b"}, {}); }

inline Graph path_ab() { return Graph::from_spec({"a", "b"}, {{"e", "a", "b"}}); }

inline Graph path_abc() { return Graph::from_spec({"a", "b", "c"}, {{"e1", "a", "b"}, {"e2", "b", "c"}}); }

inline Graph single_loop() { return Graph::from_spec({"x"}, {{"l", "x", "x"}}); }

inline Graph two_cycle() { return Graph::from_spec({"a", "b"}, {{"e1", "a", "b"}, {"e2", "b", "a"}}); }

inline Graph two_cycle_plus_isolated() {
    return Graph::from_spec({"a", "b", "c"}, {{"e1", "a", "b"}, {"e2", "b", "a"}});
}

// a -> b, a -> c: two sinks.
inline Graph fork() { return Graph::from_spec({"a", "b", "c"}, {{"e1", "a", "b"}, {"e2", "a", "c"}}); }

}  // namespace lpa::fixtures
