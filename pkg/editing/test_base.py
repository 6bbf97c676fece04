import unittest
import random
from typing import List

from hardpaths.graphs import Instance, DemandClass, grid_graph, grid_vertex
from .editor import Editor
from .rewriter import ApplicationPoint, Finder, InstanceDraft, Applier, Rewriter
from .composededitor import ComposedEditor


# -- 1. REWRITER -- #

class LeafPoint(ApplicationPoint):
    """A vertex that receives a new leaf."""

    def __init__(self, vertex: str):
        self.vertex = vertex


class DegreeTwoFinder(Finder):
    """Selects the vertices of degree two."""

    def find(self, instance: Instance) -> List[LeafPoint]:
        return [LeafPoint(v) for v in instance.graph.vertices if instance.graph.degree(v) == 2]

    def check_aps_commutativity(self, aps: List[LeafPoint]) -> bool:
        return len(aps) == len(set(ap.vertex for ap in aps))


class LeafApplier(Applier):
    """Hangs a new leaf on the application point."""

    def _apply(self, draft: InstanceDraft, ap: LeafPoint, id_: str) -> None:
        leaf = f"{ap.vertex}+{id_}"
        draft.builder.add_vertex(leaf, label=id_)
        draft.builder.add_edge(f"{ap.vertex}-{leaf}", ap.vertex, leaf, label=id_)


class LeafRewriter(Rewriter):
    """Hangs a leaf on every vertex of degree two."""

    def __init__(self):
        name = 'LeafRewriter'
        finder = DegreeTwoFinder()
        applier = LeafApplier()
        super(LeafRewriter, self).__init__(name=name, finder=finder, applier=applier)


# -- 2. COMPOSED EDITOR -- #

class TwoLeafPasses(ComposedEditor):
    """Two leaf rewriters in a row."""

    def __init__(self):
        first: Editor = LeafRewriter()
        second: Editor = LeafRewriter()
        super(TwoLeafPasses, self).__init__(children_editors=[first, second])


# -- TESTS -- #

def corners_instance() -> Instance:
    """A 3 x 3 lattice with a demand between two opposite corners."""
    return Instance(grid_graph(3, 3), [DemandClass.of(grid_vertex(0, 0), grid_vertex(2, 2))])


class EditorsTest(unittest.TestCase):

    def test_rewriter(self):
        """Exemplify the rewriting API usage."""

        # sub-case 1.1: explicit `apply` interface; all application points
        instance = corners_instance()
        r = LeafRewriter()
        rewritten = r.apply(instance)
        self.assertTrue(isinstance(rewritten, Instance))
        self.assertEqual(rewritten.graph.n_vertices, instance.graph.n_vertices + 4)  # the four corners
        self.assertEqual(rewritten.demands, instance.demands)

        # sub-case 1.2: explicit `apply` interface; single application point
        instance = corners_instance()
        r = LeafRewriter()
        aps = r.find(instance)
        ap = random.choice(aps)
        rewritten = r.apply(instance, ap)
        self.assertEqual(rewritten.graph.n_vertices, instance.graph.n_vertices + 1)

        # sub-case 2: `__call__` dunder method
        instance = corners_instance()
        r = LeafRewriter()
        self.assertTrue(isinstance(r(instance), Instance))

        # sub-case 3: error when `apply`ing a `Rewriter` to the application points computed by a different `Rewriter`
        instance = corners_instance()
        r1 = LeafRewriter()
        r2 = LeafRewriter()
        aps = r1.find(instance)
        self.assertRaises(ValueError, lambda: r2.apply(instance, aps))

        # sub-case 4: error when `apply`ing a `Rewriter` to overlapping application points
        instance = corners_instance()
        r = LeafRewriter()
        aps = r.find(instance)
        self.assertRaises(ValueError, lambda: r.apply(instance, [aps[0], aps[0]]))

        # sub-case 5: each application is labelled with its own identifier
        instance = corners_instance()
        rewritten = LeafRewriter()(instance)
        labels = set(rewritten.graph.labels[v] for v in rewritten.graph.vertices if v not in instance.graph.vertices)
        self.assertEqual(labels, {f'LeafRewriter[{i}]' for i in range(1, 5)})

    def test_composed_editor(self):
        """Exemplify the composition API usage."""
        instance = corners_instance()
        e = TwoLeafPasses()
        edited = e(instance)
        # the second rewriter finds no vertex of degree two any longer
        self.assertEqual(edited.graph.n_vertices, instance.graph.n_vertices + 4)
        self.assertRaises(TypeError, lambda: ComposedEditor([LeafRewriter(), 'not an editor']))
