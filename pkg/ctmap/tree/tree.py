# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

from collections import namedtuple
from fractions import Fraction

import networkx as nx
from cached_property import cached_property

from ctmap.error import AttachMapIncomplete
from ctmap.error import AttachMapNotInjective
from ctmap.error import AttachTargetMissing
from ctmap.error import NotATree
from ctmap.error import UnknownVertex
from ctmap.error import VertexIsRoot
from ctmap.logger import logger


class FamilyParams(namedtuple('_FamilyParams', ['delta', 'K', 'epsilon'])):
    """Declared hyperbolicity and quasi-isometry constants of the family."""

    def __new__(cls, delta=0, K=1, epsilon=0):
        return super(FamilyParams, cls).__new__(
            cls, Fraction(delta), Fraction(K), Fraction(epsilon))


class TreeEdge(namedtuple(
        '_TreeEdge', [
            'lo',
            'hi',
            'space',
            'attach_lo',
            'attach_hi',
        ])):
    """
    :param lo: tree vertex receiving ``attach_lo``
    :param hi: tree vertex receiving ``attach_hi``
    :param space: the edge space, a :class:`MetricGraph`
    :param attach_lo: per edge-space vertex, its image in the space at ``lo``
    :param attach_hi: per edge-space vertex, its image in the space at ``hi``
    """

    def __new__(cls, lo, hi, space, attach_lo, attach_hi):
        return super(TreeEdge, cls).__new__(
            cls, int(lo), int(hi), space,
            tuple(int(x) for x in attach_lo),
            tuple(int(x) for x in attach_hi),
        )

    @property
    def ends(self):
        return (self.lo, self.hi)

    def attach(self, side):
        """The attach map into tree vertex ``side``."""
        if side == self.lo:
            return self.attach_lo
        if side == self.hi:
            return self.attach_hi
        raise UnknownVertex(side)

    def other(self, side):
        return self.hi if side == self.lo else self.lo

    def __str__(self):
        return "%d-%d" % (self.lo, self.hi)


class TreeOfSpaces(object):
    """
    A finite simplicial tree with a metric graph at every vertex and every
    edge, and injective attach maps from each edge space into the spaces at
    its two ends.
    """

    def __init__(self, vertex_spaces, edges, root=0, params=None, name=None):
        self._spaces = tuple(vertex_spaces)
        self._edges = tuple(edges)
        self._root = root
        self._params = params if params is not None else FamilyParams()
        self._name = name or "tree"

        n = len(self._spaces)
        if not 0 <= root < n:
            raise UnknownVertex(root, n)

        tree = nx.Graph()
        tree.add_nodes_from(range(n))
        for e in self._edges:
            for v in e.ends:
                if not 0 <= v < n:
                    raise UnknownVertex(v, n)
            tree.add_edge(e.lo, e.hi)

        if len(self._edges) != n - 1 or not nx.is_connected(tree):
            raise NotATree(n, len(self._edges))

        self._tree = nx.freeze(tree)
        for e in self._edges:
            self._check_attach(e, e.lo)
            self._check_attach(e, e.hi)

        logger.debug("Tree '%s': %d vertices, root %d", self._name, n, root)

    def _check_attach(self, e, side):
        table = e.attach(side)
        target = self._spaces[side]
        if len(table) != e.space.vertex_count:
            raise AttachMapIncomplete(str(e), side, len(table), e.space.vertex_count)

        seen = set()
        for x in table:
            if not 0 <= x < target.vertex_count:
                raise AttachTargetMissing(str(e), side, x)
            if x in seen:
                raise AttachMapNotInjective(str(e), side, x)
            seen.add(x)

    @property
    def name(self):
        return self._name

    @property
    def root(self):
        return self._root

    @property
    def params(self):
        return self._params

    @property
    def vertex_count(self):
        return len(self._spaces)

    @property
    def edges(self):
        return self._edges

    @property
    def tree(self):
        return self._tree

    def space(self, v):
        return self._spaces[v]

    @property
    def spaces(self):
        return self._spaces

    @cached_property
    def _bfs(self):
        parent = {self._root: None}
        incoming = {self._root: None}
        depth = {self._root: 0}
        index = {}
        for i, e in enumerate(self._edges):
            index[frozenset(e.ends)] = i

        for u, v in nx.bfs_edges(self._tree, self._root, sort_neighbors=sorted):
            parent[v] = u
            incoming[v] = index[frozenset((u, v))]
            depth[v] = depth[u] + 1

        return parent, incoming, depth

    def parent(self, v):
        return self._bfs[0][v]

    def depth(self, v):
        return self._bfs[2][v]

    def incoming_edge(self, v):
        """The edge joining ``v`` to its parent."""
        if v == self._root:
            raise VertexIsRoot(v)
        return self._edges[self._bfs[1][v]]

    def children(self, v):
        return sorted(w for w in self._tree.neighbors(v) if self.parent(w) == v)

    def child_edges(self, v):
        return [self.incoming_edge(w) for w in self.children(v)]

    @cached_property
    def _tree_rows(self):
        return dict(nx.all_pairs_shortest_path_length(self._tree))

    def tree_distance(self, u, v):
        return self._tree_rows[u][v]
