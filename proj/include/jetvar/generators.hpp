#pragma once

#include <cstdint>
#include <random>

#include "jetvar/variational.hpp"

namespace jetvar::gen {

/// Deterministic RNG for property suites. Sampling avoids
/// std::uniform_int_distribution so identical seeds give identical streams
/// on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi);  // inclusive bounds
    bool flip() { return uniform(0, 1) == 1; }

  private:
    std::mt19937_64 eng_;
};

/// Shared size caps for random values (desk scale).
struct Sizes {
    int max_order = 2;
    int max_degree = 3;
    int max_terms = 3;
    int coeff_bound = 4;
};

Rational rational(Rng& rng, const Sizes& sz);
Rational nonzero_rational(Rng& rng, const Sizes& sz);
MultiIndex multiindex(Rng& rng, int n, int max_order);
JetPoly jetpoly(Rng& rng, const JetSpaceConfig& cfg, const Sizes& sz);
JetPoly base_poly(Rng& rng, const JetSpaceConfig& cfg, const Sizes& sz);
PolySection section(Rng& rng, const JetSpaceConfig& cfg, const Sizes& sz);

/// Random k-form; terms sampled from the covector basis with |sigma| <= max_order.
Form form(Rng& rng, const JetSpaceConfig& cfg, int degree, const Sizes& sz);
/// Random k-form whose every term has contact degree >= p (exactly p when
/// exact = true).
Form contact_form(Rng& rng, const JetSpaceConfig& cfg, int degree, int p, const Sizes& sz, bool exact = false);

CDiffOp cdiff_op(Rng& rng, const JetSpaceConfig& cfg, int rows, int cols, const Sizes& sz);
EvolutionaryField evolutionary_field(Rng& rng, const JetSpaceConfig& cfg, const Sizes& sz);
SourceForm source_form(Rng& rng, const JetSpaceConfig& cfg, const Sizes& sz);

}  // namespace jetvar::gen
