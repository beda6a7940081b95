#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loopkit {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotLatinSquare : Error {
  int row, col;
  NotLatinSquare(int r, int c)
      : Error("not a Latin square: repeated entry at cell (" + std::to_string(r) + "," +
              std::to_string(c) + ")"),
        row(r), col(c) {}
};

struct NoIdentity : Error {
  NoIdentity() : Error("table has no two-sided identity element") {}
};

struct BadTable : Error {
  explicit BadTable(const std::string& msg) : Error(msg) {}
};

struct CapExceeded : Error {
  std::size_t partial;
  explicit CapExceeded(std::size_t partial_count)
      : Error("group enumeration exceeded cap (partial count " + std::to_string(partial_count) + ")"),
        partial(partial_count) {}
};

struct NotAGroup : Error {
  NotAGroup() : Error("loop is not associative") {}
};

struct NotALoop : Error {
  explicit NotALoop(const std::string& witness) : Error("extension data does not define a loop: " + witness) {}
};

struct NotNormal : Error {
  NotNormal() : Error("subloop is not normal") {}
};

struct NotASubloop : Error {
  NotASubloop() : Error("element set is not a subloop") {}
};

struct NotASubgroup : Error {
  NotASubgroup() : Error("element set is not a subgroup") {}
};

struct NotMoufang : Error {
  NotMoufang() : Error("loop is not Moufang") {}
};

struct NotPowerAssociative : Error {
  NotPowerAssociative() : Error("loop is not power associative") {}
};

struct NotThreeDivisible : Error {
  NotThreeDivisible() : Error("loop is not 3-divisible") {}
};

struct NotCommutative : Error {
  NotCommutative() : Error("group is not commutative") {}
};

struct NotInKernel : Error {
  NotInKernel() : Error("permutation does not centralize the cosets") {}
};

struct CertificationFailed : Error {
  explicit CertificationFailed(const std::string& msg) : Error("pseudoautomorphism certification failed: " + msg) {}
};

struct NoCompanion : Error {
  NoCompanion() : Error("inner mapping has no companion (implementation bug)") {}
};

struct BetaDoesNotFixIdentity : Error {
  BetaDoesNotFixIdentity() : Error("middle component of autotopism does not fix the identity") {}
};

struct NotAbelianCongruence : Error {
  explicit NotAbelianCongruence(const std::string& msg) : Error("subloop does not induce an abelian congruence: " + msg) {}
};

struct BadTransversal : Error {
  explicit BadTransversal(const std::string& msg) : Error("bad transversal: " + msg) {}
};

struct NotExtendable : Error {
  std::string witness;
  explicit NotExtendable(const std::string& conflict)
      : Error("triality maps do not extend to automorphisms: " + conflict), witness(conflict) {}
};

struct NotTriality : Error {
  NotTriality() : Error("subgroup is not invariant under the triality automorphisms") {}
};

struct OrbitTrivial : Error {
  OrbitTrivial() : Error("orbit of the identity is trivial for a nontrivial subgroup") {}
};

struct EmptyCore : Error {
  explicit EmptyCore(const std::string& msg) : Error("p-core pipeline produced a trivial subgroup: " + msg) {}
};

struct NucleusNotTrivial : Error {
  NucleusNotTrivial() : Error("nucleus is not trivial") {}
};

struct NotSolvable : Error {
  NotSolvable() : Error("loop is not classically solvable") {}
};

struct UnknownSuite : Error {
  explicit UnknownSuite(const std::string& name) : Error("unknown verification suite: " + name) {}
};

}  // namespace loopkit
