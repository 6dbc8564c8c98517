# SPDX-License-Identifier: BSD-3-Clause
#
# Copyright (c) 2026, The ctmap authors. All rights reserved.
from __future__ import absolute_import
from __future__ import unicode_literals


SPECIFICATION_EXPLANATION = ''.join([
    'You might be seeing this error because the tree-of-spaces file does ',
    'not follow the supported specification version.\n',
    'See README.md, section "Tree-of-spaces files", for the format.'
])


class CTMapError(Exception):
    msg = None

    def __init__(self, msg):
        self.msg = msg

    def __str__(self):
        return self.msg

    @property
    def kind(self):
        return type(self).__name__


class InputError(CTMapError):
    """The input to a command cannot be used (exit status 2)."""
    pass


class DisconnectedGraph(InputError):
    def __init__(self, components):
        self.components = components
        shown = ", ".join(
            "{%s}" % " ".join(str(v) for v in c[:8]) + ("..." if len(c) > 8 else "")
            for c in components[:4]
        )
        super(DisconnectedGraph, self).__init__(
            "The graph has %d components: %s" % (len(components), shown)
        )


class SelfLoop(InputError):
    def __init__(self, vertex):
        super(SelfLoop, self).__init__("Self-loop at vertex %s" % vertex)


class UnknownVertex(InputError):
    def __init__(self, vertex, vertex_count=None):
        msg = "Unknown vertex: %s" % vertex
        if vertex_count is not None:
            msg += " (graph has %d vertices)" % vertex_count
        super(UnknownVertex, self).__init__(msg)


class GraphTooLarge(InputError):
    def __init__(self, vertex_count, cap, hint="sample quadruples instead"):
        super(GraphTooLarge, self).__init__(
            "Graph has %d vertices, above the cap of %d; %s" % (
                vertex_count, cap, hint)
        )


class EmptyEdgeList(InputError):
    def __init__(self):
        super(EmptyEdgeList, self).__init__("The edge list is empty")


class NonContiguousVertices(InputError):
    def __init__(self, missing):
        super(NonContiguousVertices, self).__init__(
            "Vertex ids are not contiguous, missing: %s" % ", ".join(
                str(v) for v in missing[:10])
        )


class InvalidLabels(InputError):
    def __init__(self, count, vertex_count):
        super(InvalidLabels, self).__init__(
            "Got %d labels for %d vertices" % (count, vertex_count)
        )


class MalformedEdgeList(InputError):
    def __init__(self, filename, lineno, line):
        super(MalformedEdgeList, self).__init__(
            "%s:%d: expected 'u v', got: %s" % (filename, lineno, line.strip())
        )


class SegmentGraphMismatch(InputError):
    def __init__(self):
        super(SegmentGraphMismatch, self).__init__(
            "The geodesic segment does not belong to this graph"
        )


class NotAGeodesic(InputError):
    def __init__(self, length, distance):
        super(NotAGeodesic, self).__init__(
            "Path of length %d joins vertices at distance %d" % (length, distance)
        )


class EmptySet(InputError):
    def __init__(self):
        super(EmptySet, self).__init__("The vertex set is empty")


class NotAPath(InputError):
    def __init__(self, position, u, v):
        super(NotAPath, self).__init__(
            "Vertices %s and %s at position %d are not adjacent" % (u, v, position)
        )


class OutOfOrder(InputError):
    def __init__(self, p, q, r):
        super(OutOfOrder, self).__init__(
            "Positions must satisfy p < q < r, got %d, %d, %d" % (p, q, r)
        )


class MapNotDefinedOnVertex(InputError):
    def __init__(self, vertex):
        super(MapNotDefinedOnVertex, self).__init__(
            "The vertex map is not defined on %s" % vertex
        )


class PreconditionViolated(InputError):
    def __init__(self, condition):
        super(PreconditionViolated, self).__init__(
            "Precondition violated: %s" % condition
        )


class CalibrationFailed(CTMapError):
    def __init__(self, history):
        self.history = history
        super(CalibrationFailed, self).__init__(
            "C1 did not stabilise; measured (D, C1): %s" % ", ".join(
                "(%d, %d)" % pair for pair in history) if history else
            "No admissible quadruples found"
        )


class NotATree(InputError):
    def __init__(self, vertex_count, edge_count):
        super(NotATree, self).__init__(
            "A tree on %d vertices needs %d edges, got %d" % (
                vertex_count, vertex_count - 1, edge_count)
        )


class AttachMapNotInjective(InputError):
    def __init__(self, edge, side, target):
        super(AttachMapNotInjective, self).__init__(
            "Attach map of edge %s into vertex %s hits %s twice" % (
                edge, side, target)
        )


class AttachTargetMissing(InputError):
    def __init__(self, edge, side, target):
        super(AttachTargetMissing, self).__init__(
            "Attach map of edge %s sends a point to %s, which is not a vertex "
            "of the space at %s" % (edge, target, side)
        )


class AttachMapIncomplete(InputError):
    def __init__(self, edge, side, size, expected):
        super(AttachMapIncomplete, self).__init__(
            "Attach map of edge %s into vertex %s has %d entries, expected %d" % (
                edge, side, size, expected)
        )


class VertexIsRoot(InputError):
    def __init__(self, vertex):
        super(VertexIsRoot, self).__init__(
            "Vertex %s is the root and has no incoming edge" % vertex
        )


class EndpointOutsideDomain(InputError):
    def __init__(self, vertex):
        super(EndpointOutsideDomain, self).__init__(
            "Segment endpoint %s is not in the image of the attach map" % vertex
        )


class ConstantsNegative(InputError):
    def __init__(self, C, D):
        super(ConstantsNegative, self).__init__(
            "Ladder constants must be non-negative, got C=%s, D=%s" % (C, D)
        )


class FamilyConstantsViolated(CTMapError):
    def __init__(self, audits):
        self.audits = list(audits)
        super(FamilyConstantsViolated, self).__init__(
            "The tree of spaces breaks its declared family constants: %s; "
            "run verify for the measured values" % ", ".join(self.audits)
        )


class LadderTrivial(CTMapError):
    def __init__(self):
        super(LadderTrivial, self).__init__(
            "The ladder support is the root alone"
        )


class NBeyondSpace(CTMapError):
    def __init__(self, N, radius):
        super(NBeyondSpace, self).__init__(
            "N=%d exceeds the root space radius %d" % (N, radius)
        )


class EmptyFamily(InputError):
    def __init__(self):
        super(EmptyFamily, self).__init__("The geodesic family is empty")


class InconsistentBasepoint(InputError):
    def __init__(self, a, b):
        super(InconsistentBasepoint, self).__init__(
            "Profile basepoint %s differs from properness basepoint %s" % (a, b)
        )


class NormalFormFailure(CTMapError):
    def __init__(self, detail):
        super(NormalFormFailure, self).__init__(
            "Normal form failure: %s" % detail
        )


class NotAnAutomorphism(InputError):
    def __init__(self, spec):
        super(NotAnAutomorphism, self).__init__(
            "Cannot invert the endomorphism %s within the search bound" % spec
        )


class SubgroupBallEmpty(CTMapError):
    def __init__(self, R):
        super(SubgroupBallEmpty, self).__init__(
            "No subgroup element in the ball of radius %d" % R
        )


class UnsupportedSubgroup(InputError):
    def __init__(self, name, model):
        super(UnsupportedSubgroup, self).__init__(
            "Subgroup '%s' is not available for model %s" % (name, model)
        )


class EntryOverflow(CTMapError):
    def __init__(self, bits):
        super(EntryOverflow, self).__init__(
            "Matrix entry needs %d bits, above 64; re-run with big integers" % bits
        )


class InvalidCoefficient(InputError):
    def __init__(self, index, value):
        super(InvalidCoefficient, self).__init__(
            "Twist coefficient a(%d) = %s must be at least 2" % (index, value)
        )


class NotHyperbolicTiling(InputError):
    def __init__(self, p, q):
        super(NotHyperbolicTiling, self).__init__(
            "{%d,%d} does not tile the hyperbolic plane: (p-2)(q-2) = %d <= 4" % (
                p, q, (p - 2) * (q - 2))
        )


class UnknownModel(InputError):
    def __init__(self, spec):
        super(UnknownModel, self).__init__(
            "Cannot parse model '%s'; expected free:N, fbc:N:a->..., "
            "or tiling:P:Q" % spec
        )


class InvalidSpecification(InputError):
    pass
