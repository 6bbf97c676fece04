"""Rewriters acting on the terminals of an instance.

``TerminalIdentifier`` merges pairs of terminals, ``TerminalStripper``
removes terminals together with the demand classes they serve, and
``ArcInserter`` adds arcs between existing vertices.
"""

from typing import List, Tuple, Sequence, Iterable

from hardpaths.graphs import Instance, DemandClass
from .rewriter import ApplicationPoint, Finder, InstanceDraft, Applier, Rewriter
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import UnknownVertexError, PreconditionError


def _check_vertices(instance: Instance, vertices: Iterable[str], obj_name: str) -> None:
    unknown = sorted(v for v in vertices if not instance.graph.has_vertex(v))
    if len(unknown) > 0:
        raise UnknownVertexError(hardpaths_err_header(obj_name=obj_name) + f"unknown vertices {unknown}.")


# -- IDENTIFICATION -- #

class TerminalMerge(ApplicationPoint):

    def __init__(self, absorbed: str, kept: str):
        self._absorbed = absorbed
        self._kept = kept

    @property
    def absorbed(self) -> str:
        return self._absorbed

    @property
    def kept(self) -> str:
        return self._kept


class TerminalMergeFinder(Finder):

    def __init__(self, pairs: Sequence[Tuple[str, str]]):
        super(TerminalMergeFinder, self).__init__()
        self._pairs = tuple((absorbed, kept) for absorbed, kept in pairs)

    def find(self, instance: Instance) -> List[TerminalMerge]:
        _check_vertices(instance, (v for pair in self._pairs for v in pair), self.__class__.__name__)
        return [TerminalMerge(absorbed, kept) for absorbed, kept in self._pairs]

    def check_aps_commutativity(self, aps: List[TerminalMerge]) -> bool:
        absorbed = [ap.absorbed for ap in aps]
        kept = set(ap.kept for ap in aps)
        return len(absorbed) == len(set(absorbed)) and len(kept.intersection(absorbed)) == 0


class TerminalMerger(Applier):

    @staticmethod
    def _retarget(cls: DemandClass, absorbed: str, kept: str) -> DemandClass:
        def swap(vertices):
            return frozenset(kept if v == absorbed else v for v in vertices)
        return cls._replace(sources=swap(cls.sources), sinks=swap(cls.sinks))

    def _apply(self, draft: InstanceDraft, ap: TerminalMerge, id_: str) -> None:

        builder = draft.builder
        for e in builder.incident(ap.absorbed):
            if ap.kept in builder.edges[e]:
                raise PreconditionError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"merging {ap.absorbed} into {ap.kept} would turn edge {e} into a loop.")
            builder.reattach(e, ap.absorbed, ap.kept)
        builder.remove_vertex(ap.absorbed)

        draft.demands = [TerminalMerger._retarget(cls, ap.absorbed, ap.kept) for cls in draft.demands]


class TerminalIdentifier(Rewriter):

    def __init__(self, pairs: Sequence[Tuple[str, str]]):
        name = 'TID'
        finder = TerminalMergeFinder(pairs)
        applier = TerminalMerger()
        super(TerminalIdentifier, self).__init__(name=name,
                                                 finder=finder,
                                                 applier=applier)


# -- REMOVAL -- #

class TerminalRemoval(ApplicationPoint):

    def __init__(self, vertex: str):
        self._vertex = vertex

    @property
    def vertex(self) -> str:
        return self._vertex


class TerminalRemovalFinder(Finder):

    def __init__(self, terminals: Iterable[str]):
        super(TerminalRemovalFinder, self).__init__()
        self._terminals = tuple(terminals)

    def find(self, instance: Instance) -> List[TerminalRemoval]:
        _check_vertices(instance, self._terminals, self.__class__.__name__)
        return [TerminalRemoval(v) for v in self._terminals]

    def check_aps_commutativity(self, aps: List[TerminalRemoval]) -> bool:
        return len(aps) == len(set(ap.vertex for ap in aps))


class TerminalRemover(Applier):
    """Remove a terminal, its arcs, and every demand class it serves."""

    def _apply(self, draft: InstanceDraft, ap: TerminalRemoval, id_: str) -> None:
        draft.builder.remove_vertex(ap.vertex)
        draft.demands = [cls for cls in draft.demands if ap.vertex not in (cls.sources | cls.sinks)]


class TerminalStripper(Rewriter):

    def __init__(self, terminals: Iterable[str]):
        name = 'TRM'
        finder = TerminalRemovalFinder(terminals)
        applier = TerminalRemover()
        super(TerminalStripper, self).__init__(name=name,
                                               finder=finder,
                                               applier=applier)


# -- ARC INSERTION -- #

class NewArc(ApplicationPoint):

    def __init__(self, edge: str, tail: str, head: str):
        self._edge = edge
        self._tail = tail
        self._head = head

    @property
    def edge(self) -> str:
        return self._edge

    @property
    def tail(self) -> str:
        return self._tail

    @property
    def head(self) -> str:
        return self._head


class NewArcFinder(Finder):

    def __init__(self, arcs: Sequence[Tuple[str, str, str]]):
        super(NewArcFinder, self).__init__()
        self._arcs = tuple(arcs)

    def find(self, instance: Instance) -> List[NewArc]:
        _check_vertices(instance, (v for _, tail, head in self._arcs for v in (tail, head)), self.__class__.__name__)
        clash = sorted(e for e, _, _ in self._arcs if e in instance.graph.edges)
        if len(clash) > 0:
            raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"edges {clash} already exist.")
        return [NewArc(e, tail, head) for e, tail, head in self._arcs]

    def check_aps_commutativity(self, aps: List[NewArc]) -> bool:
        return len(aps) == len(set(ap.edge for ap in aps))


class NewArcApplier(Applier):

    def _apply(self, draft: InstanceDraft, ap: NewArc, id_: str) -> None:
        draft.builder.add_edge(ap.edge, ap.tail, ap.head, label=id_)


class ArcInserter(Rewriter):

    def __init__(self, arcs: Sequence[Tuple[str, str, str]]):
        name = 'ARC'
        finder = NewArcFinder(arcs)
        applier = NewArcApplier()
        super(ArcInserter, self).__init__(name=name,
                                          finder=finder,
                                          applier=applier)
