#pragma once

#include <optional>
#include <string>

#include "axl/catalog.hpp"

namespace axl {

struct IsoWitness {
  Mat matrix;                // columns express images of A's basis in B's basis
  std::pair<int, int> generator_images;  // indices into B's axis list
  bool axial = false;        // maps the designated axis set onto B's
  bool form_preserving = false;
};

// Axial isomorphism search: try every ordered pair of B's axes as images of
// A's two generators and extend word-by-word through products.
std::optional<IsoWitness> axial_iso(const BuildResult& A, const BuildResult& B);

// Extend a map given by generator images to an algebra isomorphism, if any.
std::optional<Mat> extend_generator_map(const Algebra& A, const Vec& a0, const Vec& a1,
                                        const Algebra& B, const Vec& b0, const Vec& b1);

// The 4B <-> 4Y(alpha, (1-alpha^2)/2) algebra (not axial) isomorphism:
// given B = 4B(at) with at != -1, produce the witness onto 4Ya(1 - at).
struct AlgebraIso4B4Y {
  BuildResult target;  // the constructed 4Ya(1 - at)
  IsoWitness witness;  // from target onto the 4B instance
};
AlgebraIso4B4Y algebra_iso_4B4Y(const BuildResult& fourB);

bool intertwines_products(const Algebra& A, const Algebra& B, const Mat& phi);

}  // namespace axl
