#include "snreorder/ordering.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/minimum_degree_ordering.hpp>
#include <vector>

namespace snr {

Permutation minimum_degree(const SymmetricPattern& a) {
  using Graph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
  const Index n = a.n;
  if (n == 0) return Permutation::identity(0);
  Graph g(n);
  for (Index j = 0; j < n; ++j) {
    for (Index i : a.column(j)) {
      if (i == j) continue;
      boost::add_edge(i, j, g);
      boost::add_edge(j, i, g);
    }
  }
  std::vector<int> degree(n, 0), new_of(n), old_of(n), supernode_size(n, 1);
  auto id = boost::get(boost::vertex_index, g);
  // Boost names the old->new map "inverse permutation".
  boost::minimum_degree_ordering(
      g,
      boost::make_iterator_property_map(degree.data(), id, degree[0]),
      new_of.data(), old_of.data(),
      boost::make_iterator_property_map(supernode_size.data(), id,
                                        supernode_size[0]),
      /*delta=*/0, id);
  return Permutation::from_forward(
      std::vector<Index>(new_of.begin(), new_of.end()));
}

}  // namespace snr
