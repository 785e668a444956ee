"""
graphs package – Graph values, editing operations, families and connectivity.

Modules:
    graph_core    – Graph / VertexPartitionSpec, canonical form, editing, glue, cone
    generators    – Complete, bipartite, cycle, wheel, ring-of-K5 and figure graphs
    connectivity  – Max-flow vertex connectivity and small separator search
"""

from .graph_core import (
    Graph, VertexPartitionSpec, Edge,
    add_edge, cliques, cone, delete_edge, delete_edges, delete_vertex,
    delete_vertices, disjoint_union, edge_subgraph, every_edge_in_clique,
    glue, glue_decomposition, has_isolated_vertices, induced_subgraph,
    is_biconnected, is_connected,
)
from .generators import (
    complete_bipartite, complete_graph, complete_minus_edge, cycle_graph,
    empty_graph, degree_four_reduction, figure1_graph, figure1_outer_ring,
    figure2_core_vertices, figure2_family, figure2a_graph, figure2a_outer_ring,
    figure2b_graph, glued_complete_pair, path_graph, ring_of_k5, ring_of_k5_hinge,
    wheel_graph, FIGURE1_INNER,
)
from .connectivity import is_k_connected, local_connectivity, vertex_connectivity, vertex_separators
