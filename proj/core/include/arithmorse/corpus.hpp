#ifndef ARITHMORSE_CORPUS_HPP
#define ARITHMORSE_CORPUS_HPP

#include <cstdint>
#include <vector>

#include "arithmorse/graph.hpp"

namespace arithmorse {

/**
 * One representative of every isomorphism class of connected graphs on
 * 1..max_order vertices (at most 7), labelled 1..k. Classes come ordered by
 * order, then by canonical edge mask.
 */
std::vector<Graph> connected_graphs(int max_order);

/// Canonical edge mask of a graph on at most 7 vertices; equal exactly for isomorphic graphs.
std::uint32_t canonical_mask(const Graph& g);

}  // namespace arithmorse

#endif  // ARITHMORSE_CORPUS_HPP
