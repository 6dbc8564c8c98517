# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals

import hashlib
from fractions import Fraction

import networkx as nx
import numpy as np
from cached_property import cached_property

from ctmap.error import DisconnectedGraph
from ctmap.error import EmptyEdgeList
from ctmap.error import InvalidLabels
from ctmap.error import NonContiguousVertices
from ctmap.error import NotAGeodesic
from ctmap.error import NotAPath
from ctmap.error import SegmentGraphMismatch
from ctmap.error import SelfLoop
from ctmap.error import UnknownVertex
from ctmap.logger import logger


class MetricGraph(object):
    """
    A finite connected graph with unit-length edges, carrying its path
    metric.  Vertices are the integers ``0 .. vertex_count - 1``.

    Distances are exact integers obtained by breadth-first search and are
    cached per source vertex on first use.  The graph itself never changes
    after construction.
    """

    def __init__(self, vertex_count, edges, labels=None):
        """
        :param vertex_count: number of vertices, at least one
        :param edges: iterable of ``(u, v)`` pairs
        :param labels: optional sequence of per-vertex tags
        """
        if vertex_count < 1:
            raise EmptyEdgeList()

        graph = nx.Graph()
        graph.add_nodes_from(range(vertex_count))

        for u, v in edges:
            if u == v:
                raise SelfLoop(u)
            for w in (u, v):
                if not 0 <= w < vertex_count:
                    raise UnknownVertex(w, vertex_count)
            graph.add_edge(u, v)

        if vertex_count > 1 and not nx.is_connected(graph):
            components = sorted(
                sorted(c) for c in nx.connected_components(graph)
            )
            raise DisconnectedGraph(components)

        if labels is not None:
            labels = tuple(labels)
            if len(labels) != vertex_count:
                raise InvalidLabels(len(labels), vertex_count)

        self._graph = nx.freeze(graph)
        self._vertex_count = vertex_count
        self._labels = labels
        self._adjacency = tuple(
            tuple(sorted(graph.neighbors(v))) for v in range(vertex_count)
        )
        self._rows = {}
        self._geodesics = {}

    @property
    def vertex_count(self):
        return self._vertex_count

    @property
    def adjacency(self):
        return self._adjacency

    @property
    def labels(self):
        return self._labels

    @property
    def nx(self):
        """The underlying (frozen) networkx graph."""
        return self._graph

    def neighbors(self, v):
        self.check_vertex(v)
        return self._adjacency[v]

    def label(self, v):
        self.check_vertex(v)
        if self._labels is None:
            return str(v)
        return self._labels[v]

    @cached_property
    def label_index(self):
        if self._labels is None:
            return {str(v): v for v in range(self._vertex_count)}
        return {label: v for v, label in enumerate(self._labels)}

    @cached_property
    def edges(self):
        return tuple(sorted(
            (min(u, v), max(u, v)) for u, v in self._graph.edges()
        ))

    @property
    def edge_count(self):
        return len(self.edges)

    @property
    def is_tree(self):
        return self.edge_count == self._vertex_count - 1

    @cached_property
    def digest(self):
        h = hashlib.sha256()
        h.update(("%d\n" % self._vertex_count).encode('utf-8'))
        for u, v in self.edges:
            h.update(("%d %d\n" % (u, v)).encode('utf-8'))
        return h.hexdigest()

    def check_vertex(self, v):
        if not isinstance(v, (int, np.integer)) or not 0 <= v < self._vertex_count:
            raise UnknownVertex(v, self._vertex_count)

    def distances_from(self, source):
        """Read-only integer array of distances from ``source``."""
        self.check_vertex(source)
        source = int(source)

        row = self._rows.get(source)
        if row is None:
            row = np.empty(self._vertex_count, dtype=np.int64)
            lengths = nx.single_source_shortest_path_length(self._graph, source)
            for v, d in lengths.items():
                row[v] = d
            row.setflags(write=False)
            self._rows[source] = row

        return row

    def distance(self, u, v):
        self.check_vertex(v)
        return int(self.distances_from(u)[v])

    @cached_property
    def distance_matrix(self):
        logger.debug("All-pairs distances on %d vertices", self._vertex_count)
        matrix = np.vstack([
            self.distances_from(v) for v in range(self._vertex_count)
        ])
        matrix.setflags(write=False)
        return matrix

    @cached_property
    def diameter(self):
        return int(self.distance_matrix.max())

    def nearest(self, sources):
        """
        Multi-source breadth-first search.

        Returns ``(dist, owner)`` where ``dist[v]`` is the distance from ``v``
        to the source set and ``owner[v]`` is the smallest position in
        ``sources`` among the sources at that distance.
        """
        dist = np.full(self._vertex_count, -1, dtype=np.int64)
        owner = np.full(self._vertex_count, -1, dtype=np.int64)

        frontier = []
        for i, s in enumerate(sources):
            self.check_vertex(s)
            if dist[s] < 0:
                dist[s] = 0
                owner[s] = i
                frontier.append(int(s))

        if not frontier:
            return dist, owner

        layer = 0
        while frontier:
            layer += 1
            reached = {}
            for u in frontier:
                o = owner[u]
                for w in self._adjacency[u]:
                    if dist[w] >= 0:
                        continue
                    if w not in reached or o < reached[w]:
                        reached[w] = o

            for w, o in reached.items():
                dist[w] = layer
                owner[w] = o

            frontier = sorted(reached)

        return dist, owner

    def geodesic(self, u, v):
        """
        The canonical geodesic from ``u`` to ``v``: breadth-first search from
        ``u``, and every vertex takes its lowest-id neighbour one layer closer
        to ``u`` as parent.
        """
        self.check_vertex(v)
        key = (int(u), int(v))

        vertices = self._geodesics.get(key)
        if vertices is None:
            row = self.distances_from(u)
            path = [int(v)]
            current = int(v)
            while row[current] > 0:
                closer = row[current] - 1
                current = next(w for w in self._adjacency[current] if row[w] == closer)
                path.append(current)
            vertices = tuple(reversed(path))
            self._geodesics[key] = vertices

        return GeodesicSegment(self, vertices, verified=True)

    def interval(self, u, v):
        """Boolean mask of the vertices lying on some geodesic from u to v."""
        du = self.distances_from(u)
        dv = self.distances_from(v)
        return du + dv == du[v]

    def __repr__(self):
        return "MetricGraph(vertices=%d, edges=%d)" % (
            self._vertex_count, self.edge_count)


class GeodesicSegment(object):
    """An ordered vertex path realising the distance between its ends."""

    def __init__(self, graph, vertices, verified=False):
        vertices = tuple(int(v) for v in vertices)
        if not vertices:
            raise NotAPath(0, None, None)

        if not verified:
            for v in vertices:
                graph.check_vertex(v)
            for i in range(len(vertices) - 1):
                if vertices[i + 1] not in graph.adjacency[vertices[i]]:
                    raise NotAPath(i, vertices[i], vertices[i + 1])
            d = graph.distance(vertices[0], vertices[-1])
            if d != len(vertices) - 1:
                raise NotAGeodesic(len(vertices) - 1, d)

        self._graph = graph
        self._vertices = vertices

    @property
    def graph(self):
        return self._graph

    @property
    def vertices(self):
        return self._vertices

    @property
    def start(self):
        return self._vertices[0]

    @property
    def end(self):
        return self._vertices[-1]

    @property
    def length(self):
        return len(self._vertices) - 1

    def __len__(self):
        return len(self._vertices)

    def __iter__(self):
        return iter(self._vertices)

    def __getitem__(self, index):
        return self._vertices[index]

    def __eq__(self, other):
        return isinstance(other, GeodesicSegment) \
            and self._vertices == other._vertices \
            and self._graph.digest == other._graph.digest

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._vertices)

    def belongs_to(self, graph):
        return self._graph is graph or self._graph.digest == graph.digest

    def check_graph(self, graph):
        if not self.belongs_to(graph):
            raise SegmentGraphMismatch()

    def sub(self, i, j):
        """The subsegment between positions i and j (inclusive, i <= j)."""
        return GeodesicSegment(self._graph, self._vertices[i:j + 1], verified=True)

    @property
    def digest(self):
        h = hashlib.sha256(self._graph.digest.encode('utf-8'))
        h.update(" ".join(str(v) for v in self._vertices).encode('utf-8'))
        return h.hexdigest()[:16]

    def __repr__(self):
        return "GeodesicSegment(%s)" % list(self._vertices)


def build_graph(edges, labels=None):
    """
    Build a :class:`MetricGraph` from a list of vertex-id pairs.  Ids are
    shifted so the smallest becomes 0; they must then cover ``0 .. n-1``.
    """
    edges = [(int(u), int(v)) for u, v in edges]
    if not edges:
        raise EmptyEdgeList()

    ids = sorted({w for e in edges for w in e})
    low = ids[0]
    if low != 0:
        logger.debug("Shifting vertex ids by %d", -low)
        edges = [(u - low, v - low) for u, v in edges]
        ids = [w - low for w in ids]

    if ids[-1] != len(ids) - 1:
        missing = sorted(set(range(ids[-1] + 1)) - set(ids))
        raise NonContiguousVertices(missing)

    return MetricGraph(len(ids), edges, labels=labels)


def distance(g, u, v):
    return g.distance(u, v)


def geodesic(g, u, v):
    return g.geodesic(u, v)


def gromov_product(g, a, b, c):
    """(a,b)_c as an exact half-integer."""
    row = g.distances_from(c)
    g.check_vertex(a)
    g.check_vertex(b)
    return Fraction(int(row[a]) + int(row[b]) - g.distance(a, b), 2)


def ball(g, center, R):
    row = g.distances_from(center)
    return frozenset(int(v) for v in np.nonzero(row <= R)[0])
