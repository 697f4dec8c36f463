#pragma once

#include "sigcurve/poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigcurve {

struct Budget {
    size_t max_basis = 5000;
    int max_degree = 400;
    size_t max_terms = 200000;  // per polynomial
    double max_seconds = 20;    // wall clock
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "N", "N,D" or "N,D,SECONDS" (basis size, degree, wall clock); throws std::invalid_argument.
Budget parse_budget(const std::string& s);

// Block order: block[v] gives the block of variable v, lower block number = larger;
// graded reverse lex inside each block.
struct BlockOrder {
    std::vector<int> block;
    int compare(const Mono& a, const Mono& b) const;
};

// Reduced Groebner basis, monic, sorted by leading monomial ascending.
std::vector<SparsePoly> groebner_basis(const std::vector<SparsePoly>& gens, const BlockOrder& order,
                                       const Budget& budget = {});

// Basis of the elimination ideal in the variables named in keep (other variables are
// eliminated, blocks in the order the remaining variables appear in the ring).
// Results live in the input ring.  With keep = all variables this is the reduced basis
// under grevlex.
std::vector<SparsePoly> groebner_eliminate(const std::vector<SparsePoly>& gens, const std::vector<std::string>& keep,
                                           const Budget& budget = {});

// Same with explicit blocks: variables of blocks[0] largest, then blocks[1], ...; keep
// is the last block.
std::vector<SparsePoly> groebner_eliminate_blocks(const std::vector<SparsePoly>& gens,
                                                  const std::vector<std::vector<std::string>>& blocks,
                                                  const Budget& budget = {});

}  // namespace sigcurve
