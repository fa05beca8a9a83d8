#pragma once

#include <array>
#include <string>

#include "eqh/group_action.hpp"

namespace eqh {

// Small named groups and actions used by the test battery, the verification
// suite, and the bundled data files.

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
FiniteGroup klein_four_group();  // Z2 x Z2, element v1 + 2*v2
FiniteGroup symmetric3_group();
FiniteGroup dihedral8_group();  // symmetries of the square, order 8
FiniteGroup gl2_f2_group();

// Decode an element of gl2_f2_group() as the matrix [[a,b],[c,d]].
std::array<int, 4> gl2_f2_matrix(int index);

GroupAction trivial_action(const FiniteGroup& gamma, const FiniteGroup& g);
GroupAction conjugation_action(const FiniteGroup& g);
GroupAction gl2_on_klein_action();
// Z2 acting on an abelian group by inversion.
GroupAction inversion_action(const FiniteGroup& g);

struct CorpusInstance {
  std::string name;
  GroupAction action;  // owns both groups
  std::vector<uint32_t> primes;  // the primes exercised on this instance
};

// Every (group, action, prime) combination the verification suite runs.
std::vector<CorpusInstance> bundled_corpus();

}  // namespace eqh
