"""
Young-diagram multiindices #m and the merge-coarsening order on the partitions of k.
"""
import logging
from collections import namedtuple
from itertools import combinations

from sympy.utilities.iterables import partitions as sympy_partitions

from splitforms.kernel.exceptions import PartitionException

logger = logging.getLogger(__name__)

FigureComparison = namedtuple('FigureComparison', ['present', 'missing_from_figure', 'extra_in_figure'])


class Partition(object):
    """
    A weakly decreasing tuple of positive integers; its weight k is the sum of the parts.
    """
    __slots__ = ('parts',)

    def __init__(self, parts):
        # type: (tuple) -> None
        parts = tuple(int(p) for p in parts)
        if not parts or any(p < 1 for p in parts):
            raise PartitionException(u"Partition parts must be positive integers, got {}".format(parts))
        self.parts = tuple(sorted(parts, reverse=True))

    @property
    def weight(self):
        # type: () -> int
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __lt__(self, other):
        return self.parts < other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return u"Partition{}".format(self.parts)

    def __str__(self):
        return u"{{{}}}".format(u",".join(str(p) for p in self.parts))

    def label(self):
        # type: () -> str
        return partition_label(self)

    def node_id(self):
        # type: () -> str
        return u"m" + u"_".join(str(p) for p in self.parts)


def partition_label(partition):
    # type: (Partition) -> str
    return u"H^{}_{{{}}}".format(partition.weight, u",".join(str(p) for p in partition.parts))


def partitions_of(k):
    # type: (int) -> list
    """
    All partitions of k in reverse-lexicographic order, {k} first and {1,...,1} last.
    :param k: positive weight
    :return: list of Partition
    """
    if k < 1:
        raise PartitionException(u"Partitions are only defined for k >= 1, got {}".format(k))
    found = []
    for multiplicities in sympy_partitions(k):
        parts = []
        for part, count in multiplicities.items():
            parts.extend([part] * count)
        found.append(Partition(parts))
    return sorted(found, reverse=True)


def covers(partition):
    # type: (Partition) -> set
    """
    Partitions obtained by merging exactly two parts.
    """
    result = set()
    for i, j in combinations(range(len(partition.parts)), 2):
        rest = [p for position, p in enumerate(partition.parts) if position not in (i, j)]
        result.add(Partition(rest + [partition.parts[i] + partition.parts[j]]))
    return result


def coarsenings(partition):
    # type: (Partition) -> set
    """Every partition reachable from this one by repeated merges, itself included."""
    seen = {partition}
    frontier = [partition]
    while frontier:
        current = frontier.pop()
        for cover in covers(current):
            if cover not in seen:
                seen.add(cover)
                frontier.append(cover)
    return seen


class PartitionDag(object):
    """
    Hasse diagram of the merge-coarsening order on partitions of a fixed weight.
    """

    def __init__(self, weight, nodes, edges):
        # type: (int, list, list) -> None
        self.weight = weight
        self.nodes = list(nodes)
        self._order = {node: position for position, node in enumerate(self.nodes)}
        self.edges = sorted(edges, key=self._edge_key)
        self._successors = {node: [] for node in self.nodes}
        self._predecessors = {node: [] for node in self.nodes}
        for tail, head in self.edges:
            self._successors[tail].append(head)
            self._predecessors[head].append(tail)

    def _edge_key(self, edge):
        return self._order[edge[0]], self._order[edge[1]]

    def successors(self, partition):
        # type: (Partition) -> list
        return list(self._successors.get(partition, ()))

    def predecessors(self, partition):
        # type: (Partition) -> list
        return list(self._predecessors.get(partition, ()))

    def sources(self):
        # type: () -> list
        return [node for node in self.nodes if not self._predecessors[node]]

    def sinks(self):
        # type: () -> list
        return [node for node in self.nodes if not self._successors[node]]

    def ranks(self):
        # type: () -> list
        """Nodes grouped by part count, most parts first."""
        grouped = {}
        for node in self.nodes:
            grouped.setdefault(len(node), []).append(node)
        return [grouped[size] for size in sorted(grouped, reverse=True)]


def build_dag(k):
    # type: (int) -> PartitionDag
    nodes = partitions_of(k)
    edges = [(node, cover) for node in nodes for cover in covers(node)]
    logger.debug("Built merge diagram for k=%s: %s nodes, %s edges", k, len(nodes), len(edges))
    return PartitionDag(k, nodes, edges)


def to_dot(dag):
    # type: (PartitionDag) -> str
    """
    Deterministic Graphviz digraph, laid out left to right with one rank per part count.
    """
    lines = [u'digraph H{} {{'.format(dag.weight), u'  rankdir=LR;', u'  node [shape=plaintext];']
    for rank in dag.ranks():
        lines.append(u'  {{ rank=same; {} }}'.format(u' '.join(u'"{}";'.format(n.node_id()) for n in rank)))
    for rank in dag.ranks():
        for node in rank:
            lines.append(u'  "{}" [label="{}"];'.format(node.node_id(), node.label()))
    for tail, head in dag.edges:
        lines.append(u'  "{}" -> "{}";'.format(tail.node_id(), head.node_id()))
    lines.append(u'}')
    return u'\n'.join(lines) + u'\n'


def count_maximal_chains(dag):
    # type: (PartitionDag) -> int
    """
    Number of source-to-sink paths, counted over the diagram without listing them.
    """
    paths = {}
    # every edge lowers the part count, so fewer parts are finished first
    for node in sorted(dag.nodes, key=len):
        successors = dag.successors(node)
        paths[node] = sum(paths[head] for head in successors) if successors else 1
    return sum(paths[source] for source in dag.sources())


def maximal_chains(dag):
    # type: (PartitionDag) -> list
    """
    All source-to-sink paths; a single chain means the H^k_{#m} sequence is filtered. The number of chains
    grows quickly with k, use count_maximal_chains when only the count is needed.
    """
    chains = []
    for source in dag.sources():
        stack = [[source]]
        while stack:
            path = stack.pop()
            successors = dag.successors(path[-1])
            if not successors:
                chains.append(path)
                continue
            stack.extend(path + [head] for head in reversed(successors))
    return chains


def _arrows(*pairs):
    return frozenset((Partition(tuple(int(c) for c in tail)), Partition(tuple(int(c) for c in head)))
                     for tail, head in pairs)


# arrows as drawn in the printed H^k_{#m} figures; for k=6 each arrow is read to the label nearest its head
FIGURE_ARROWS = {
    3: _arrows(('111', '21'), ('21', '3')),
    4: _arrows(('1111', '211'), ('211', '31'), ('211', '22'), ('31', '4'), ('22', '4')),
    5: _arrows(('11111', '2111'), ('2111', '221'), ('2111', '311'), ('221', '41'), ('311', '32'),
               ('41', '5'), ('32', '5')),
    6: _arrows(('111111', '21111'), ('21111', '2211'), ('21111', '3111'), ('2211', '222'), ('2211', '411'),
               ('3111', '411'), ('3111', '321'), ('222', '42'), ('411', '51'), ('411', '42'), ('321', '51'),
               ('321', '42'), ('321', '33'), ('51', '6'), ('42', '6'), ('33', '6')),
}


def figure_arrows(k):
    # type: (int) -> frozenset
    return FIGURE_ARROWS.get(k)


def compare_with_figure(dag):
    # type: (PartitionDag) -> FigureComparison
    """
    Compare the complete merge diagram with the printed figure for the same k.
    :return: FigureComparison of edge sets, or None when no figure exists for this weight
    """
    drawn = figure_arrows(dag.weight)
    if drawn is None:
        return None
    edges = set(dag.edges)
    comparison = FigureComparison(
        present=sorted(edges & drawn, key=dag._edge_key),
        missing_from_figure=sorted(edges - drawn, key=dag._edge_key),
        extra_in_figure=sorted(drawn - edges, key=lambda e: (e[0].parts, e[1].parts)),
    )
    if comparison.missing_from_figure:
        logger.info("Figure for k=%s omits %s merge edges", dag.weight, len(comparison.missing_from_figure))
    return comparison
