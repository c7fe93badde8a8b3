#pragma once

#include <chrono>
#include <iosfwd>
#include <vector>

#include "pwords/graphs.hpp"
#include "pwords/words.hpp"

// k-Gray codes on partition words: cyclic listings of a flip graph's whole
// vertex set in which consecutive words sit at graph distance at most k.

namespace pwords {

struct GrayCode {
    int d = 1;
    int n = 1;
    int k = 2; // flip bound
    bool cyclic = true;
    std::vector<Word> sequence;
};

/// 2-Gray code over the d = 1 words with the all-zeros word removed, found
/// as a Hamiltonian cycle of the square of the flip graph (which exists for
/// n >= 4, the graph being 2-connected). Throws BudgetExceededError if the
/// search does not close in time.
GrayCode gray2(int n, std::chrono::milliseconds budget = std::chrono::seconds(10),
               std::uint64_t seed = 0);

/// 3-Gray code over all words, search-free: walk a breadth-first spanning
/// tree in the order that realizes a Hamiltonian cycle of the tree's cube.
GrayCode gray3(int d, int n);

/// True iff the sequence is a permutation of the graph's vertex set and
/// every consecutive pair (cyclically, if cyclic) is within graph distance
/// k, measured by bounded search in the flip graph. The graph must match
/// the code's (d, n, vertex-set convention), else ContractError.
bool verify(const GrayCode &code, const PartitionGraph &g);

/// Header line "d n k cyclic", then one word per line in sequence order.
void write_graycode(std::ostream &os, const GrayCode &code);

} // namespace pwords
