#ifndef SLICINGS_ERRORS_HPP
#define SLICINGS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slicings {

struct IllegalMove : std::runtime_error {
  int step;
  IllegalMove(int step_, const std::string& what_)
      : std::runtime_error("illegal move at step " + std::to_string(step_) +
                           ": " + what_),
        step(step_) {}
};

struct MalformedSlicing : std::runtime_error {
  explicit MalformedSlicing(const std::string& what_)
      : std::runtime_error("malformed slicing: " + what_) {}
};

struct NotHorizontal : std::runtime_error {
  NotHorizontal() : std::runtime_error("block is not horizontal") {}
};

struct NotInFamily : std::runtime_error {
  explicit NotInFamily(const std::string& what_)
      : std::runtime_error("slicing is not in the family: " + what_) {}
};

struct InvalidTriple : std::runtime_error {
  explicit InvalidTriple(const std::string& what_)
      : std::runtime_error("invalid path triple: " + what_) {}
};

struct NotInS : std::runtime_error {
  NotInS() : std::runtime_error("permutation is not in the class S") {}
};

struct NotAPartition : std::runtime_error {
  explicit NotAPartition(const std::string& what_)
      : std::runtime_error("blocks do not partition the rectangle: " + what_) {}
};

struct NotSchroeder : std::runtime_error {
  NotSchroeder() : std::runtime_error("floorplan is not Schroeder") {}
};

struct NonDivisible : std::runtime_error {
  explicit NonDivisible(const std::string& what_)
      : std::runtime_error("exact division failed: " + what_) {}
};

struct RootRefinementFailed : std::runtime_error {
  explicit RootRefinementFailed(const std::string& what_)
      : std::runtime_error("kernel root refinement failed: " + what_) {}
};

}  // namespace slicings

#endif
