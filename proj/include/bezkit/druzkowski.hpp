#pragma once

#include <optional>
#include <vector>

#include "bezkit/bezoutian.hpp"
#include "bezkit/matrix.hpp"

namespace bez {

// The Jacobian of the candidate system is not a nonzero constant; carries
// the offending polynomial.
struct NotDruzkowski : Error {
    Polynomial offending_jacobian;
    explicit NotDruzkowski(Polynomial jac)
        : Error("Jacobian is not the constant 1; not a Druzkowski morphism"),
          offending_jacobian(std::move(jac)) {}
};

// f_i = x_i + (sum_j a_ij x_j)^3 with Jacobian identically 1.
struct DruzkowskiSpec {
    RationalMatrix matrix;
    PolySystem system;
    Rational jacobian_constant;  // always 1
};

// Builds the cubic-linear system from A and validates the constant-Jacobian
// condition; throws NotDruzkowski otherwise.
DruzkowskiSpec from_matrix(const RationalMatrix& a);

// The system of shape x_i + (linear form)^3 for an arbitrary square matrix,
// with no Jacobian check.
PolySystem cubic_linear_system(const RationalMatrix& a);

// perm[i] = sigma(i): the permutation matrix P sends e_i to e_{sigma(i)}.
// Returns the spec of P A P^-1 and verifies P o f o P^-1 = f_{PAP^-1} as
// polynomial systems.
DruzkowskiSpec permutation_conjugate(const DruzkowskiSpec& spec,
                                     const std::vector<int>& perm);

struct RowMultResult {
    PolySystem composed;  // D_i^3 o f o D_i^-1
    bool is_druzkowski = false;
    RationalMatrix candidate;  // D_i A D_i^-1
};

// Conjugation by the row-multiplication matrix D_i with scalar m != 0.
// Druzkowski shape survives iff m = +-1.
RowMultResult row_mult_conjugate(const DruzkowskiSpec& spec, int i, const Rational& m);

struct ConjugationWitness {
    std::vector<int> permutation;  // sigma as above
    std::vector<int> signs;        // entries +-1
    RationalMatrix conjugated;     // strictly upper triangular P A P^-1
};

// Exhaustive search over P = (permutation matrix) * diag(signs) for a
// strictly upper triangular P A P^-1.  Deterministic enumeration:
// permutations in lexicographic order, then sign vectors with +1 before -1.
// Throws SearchSpaceTooLarge when n > max_n.
std::optional<ConjugationWitness> conjugate_search(const RationalMatrix& a,
                                                  int max_n = 6);

struct ExperimentRecord {
    size_t sample_index = 0;
    RationalPoint q;
    std::optional<Rational> constant_value;
    bool is_one = false;
    double elapsed_ms = 0.0;
};

// Evidence gathering for whether the reduced Bezoutian of f_A - q is the
// constant 1 at every rational point.  Sample 0 is always the origin; the
// rest have integer coordinates uniform in [-range, range], deterministic
// in (seed, samples, range).
std::vector<ExperimentRecord> question411_experiment(const RationalMatrix& a,
                                                     size_t samples,
                                                     uint64_t seed,
                                                     unsigned range);

}  // namespace bez
