#pragma once

#include "cdc/network.hpp"
#include "cdc/reduction.hpp"

namespace cdc {

/// Explicit configuration for the compiled network of `f` under assignment
/// `pi`: u_i is laid out vertically (tall and narrow) iff pi(p_i) is true.
/// Defined for every assignment; it satisfies the network exactly when pi
/// satisfies f. All coordinates are multiples of 1/20.
Configuration build_witness(const CnfFormula& f, const Assignment& pi, const VariableMap& vm);

/// Compiles f, builds the witness for pi and verifies it.
bool witness_decides(const CnfFormula& f, const Assignment& pi);

/// pi(p_i) = true iff u_i is vertical with respect to f_i. Throws NotUlc if
/// some u_i is not in the upper-left-corner relation with f_i.
Assignment read_assignment(const Configuration& c, const VariableMap& vm);

/// Uniform positive scaling of every region (20 turns witnesses integral).
Configuration scale_configuration(const Configuration& c, const Rational& factor);

}  // namespace cdc
