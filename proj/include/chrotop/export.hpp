#pragma once

#include <chrotop/complex.hpp>
#include <chrotop/terminating.hpp>

#include <string>

namespace chrotop {

/// Hasse diagram of the face poset, one node per nonempty simplex.
auto to_dot(const Complex & k) -> std::string;

/// Drawing of I_depth over a single edge or triangle. Cells are filled by the
/// depth at which they terminated; live cells are left grey. Unsupported for
/// other bases.
auto to_svg(const TerminatingSubdivision & t, int depth) -> std::string;

}
