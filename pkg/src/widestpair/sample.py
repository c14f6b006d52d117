"""Built-in example network used by docs and tests.

Five nodes, eight links. The widest node-disjoint pair from 0 to 3 is
0-2-4-3 (bottleneck 12) with 0-1-3 (bottleneck 7), combined 19.
"""

from .graph import Graph, parse_topology

FIVE_NODE_TEXT = """\
# five-node example network
nodes 5
link 0 1 9
link 0 2 12
link 0 4 2
link 1 3 7
link 1 4 5
link 2 3 1
link 2 4 12
link 3 4 12
"""


def five_node_network() -> Graph:
    """Parse and return the packaged five-node example network."""
    return parse_topology(FIVE_NODE_TEXT)
