#pragma once

#include "relhfk/pipeline.hpp"

namespace relhfk {

enum class Tier : unsigned char { NotQuasiGeometric, QuasiGeometric, PseudoGeometric };

const char* to_string(Tier tier);

// Word-level executability of the algorithm. PseudoGeometric implies
// QuasiGeometric. Note that pseudo-geometric does not certify that the
// presentation comes from a Heegaard diagram, so the output is an honest
// homology computation only for diagram presentations.
struct Classification {
  Tier tier = Tier::NotQuasiGeometric;
  std::vector<Violation> failures;
};

// Total on cyclically reduced words (reduces its input first).
Classification classify(const CyclicRelator& relator);

enum class TransformKind : unsigned char { L, R, Tau };

// l_k: X -> Y^k X;  r_k: X -> X Y^k;  tau: Y -> Y^-1. X^-1 maps to the
// inverse of X's image. The result is cyclically reduced.
struct TransformOp {
  TransformKind kind = TransformKind::Tau;
  int k = 0;
};

CyclicRelator transform(const CyclicRelator& relator, const TransformOp& op);

struct CovarianceReport {
  struct Entry {
    std::string op;
    bool pass = false;
    std::string detail;
  };
  bool base_ok = false;
  Laurent2 base;  // Poincare polynomial of the input
  std::vector<Entry> entries;

  bool all_pass() const;
};

// Recomputes the Poincare polynomial after l_{+-1}, r_{+-1} (expected equal)
// and after tau (expected (t,q) -> (t^-1,q^-1)).
CovarianceReport verify_transformation_covariance(const CyclicRelator& relator);

}  // namespace relhfk
