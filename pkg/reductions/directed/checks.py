"""Structural checks of the acyclic reduction.

The checks never raise on findings: they collect them in a
``StructureReport``.
"""

from typing import List, Iterable, FrozenSet

import networkx as nx

from .layout import DirectedLayout, S1, S2, T1, T2
from .transforms import WRAP_DEMAND
from hardpaths.graphs import Instance, is_tight
from hardpaths.reductions.report import Finding, StructureReport
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import PreconditionError


def _core_is_acyclic(instance: Instance, terminals: Iterable[str], excluded_edges: Iterable[str] = ()) -> bool:
    g = instance.graph.to_networkx()
    for e in excluded_edges:
        u, v = instance.graph.endpoints(e)
        g.remove_edge(u, v, key=e)
    g.remove_nodes_from(t for t in terminals if g.has_node(t))
    return nx.is_directed_acyclic_graph(g)


def _check_cuts(instance: Instance, layout: DirectedLayout, violations: List[Finding], notes: List[str]) -> None:
    registry = layout.registry
    graph = instance.graph

    sizes = []
    for i in range(1, registry.columns):
        cut = registry.vertical(i)
        sizes.append(len(cut))
        for e in cut:
            tail, _ = graph.endpoints(e)
            if registry.locate(tail)[0] > i:
                violations.append(Finding('directed-cut', f"arc {e} enters columns 1..{i} from the right."))
    notes.append(f"vertical cuts hold {sizes} arcs.")

    sizes = []
    for j in range(1, registry.rows):
        cut = registry.horizontal(j)
        sizes.append(len(cut))
        for e in cut:
            tail, _ = graph.endpoints(e)
            if registry.locate(tail)[1] > j:
                violations.append(Finding('directed-cut', f"arc {e} enters rows 1..{j} from below."))
    notes.append(f"horizontal cuts hold {sizes} arcs.")


def _check_fan(instance: Instance, terminal: str, outgoing: bool, expected: Iterable[str], what: str, violations: List[Finding]) -> None:
    graph = instance.graph
    if outgoing:
        ends = [graph.endpoints(e).v for e in graph.out_edges(terminal)]
    else:
        ends = [graph.endpoints(e).u for e in graph.in_edges(terminal)]
    expected = list(expected)
    if sorted(ends) != sorted(expected) or len(ends) != len(set(ends)):
        violations.append(Finding('fan', f"{terminal} should have exactly one arc per {what} ({len(expected)}), it has {len(ends)}."))


def _check_tight(instance: Instance, U: FrozenSet[str], label: str, violations: List[Finding], notes: List[str]) -> None:
    report = is_tight(instance, U)
    notes.append(f"the cut around {label} has slack {report.slack}.")
    if report.verdict is not True:
        violations.append(Finding('tightness', f"the cut around {label} is not tight (slack {report.slack}, capacity {report.capacity}, demand {report.demand})."))


def claim5_check(instance: Instance, layout: DirectedLayout) -> StructureReport:
    """Check that the compiled graph is acyclic, that every inter-band cut
    of the grid is directed, that the terminal cuts are tight, and that the
    terminals have one arc per row or column."""
    if layout.registry is None:
        raise PreconditionError(hardpaths_err_header(obj_name='claim5_check') + "the layout carries no cut registry; use the one returned by compile_full.")
    violations, notes = [], []

    if not nx.is_directed_acyclic_graph(instance.graph.to_networkx()):
        violations.append(Finding('acyclic', "the compiled graph has a directed cycle."))

    _check_cuts(instance, layout, violations, notes)

    everything = frozenset(instance.graph.vertices)
    _check_tight(instance, frozenset((S1,)), S1, violations, notes)
    _check_tight(instance, frozenset((T1,)), T1, violations, notes)
    _check_tight(instance, everything - {S2}, S2, violations, notes)
    _check_tight(instance, everything - {T2}, T2, violations, notes)

    boundary = layout.registry.boundary
    _check_fan(instance, T1, True, boundary['top'], 'column', violations)
    _check_fan(instance, S1, True, boundary['left'], 'row', violations)
    _check_fan(instance, T2, False, boundary['bottom'], 'column', violations)
    _check_fan(instance, S2, False, boundary['right'], 'row', violations)
    for found, expected, what in ((len(boundary['top']), layout.columns, 'columns'), (len(boundary['left']), layout.rows, 'rows')):
        if found != expected:
            violations.append(Finding('fan', f"the grid exposes {found} entries for {expected} {what}."))

    return StructureReport(violations=tuple(violations), notes=tuple(notes))


def check_identified(instance: Instance, layout: DirectedLayout) -> StructureReport:
    """The checks of ``claim5_check`` after the terminals are identified:
    each of ``s1`` and ``s2`` now sends and collects one class of paths."""
    violations, notes = [], []

    if not _core_is_acyclic(instance, (S1, S2)):
        violations.append(Finding('acyclic', "the grid has a directed cycle."))

    _check_cuts(instance, layout, violations, notes)

    everything = frozenset(instance.graph.vertices)
    for terminal in (S1, S2):
        _check_tight(instance, frozenset((terminal,)), terminal, violations, notes)
        _check_tight(instance, everything - {terminal}, f"V - {terminal}", violations, notes)

    boundary = layout.registry.boundary
    _check_fan(instance, S1, True, boundary['left'], 'row', violations)
    _check_fan(instance, S2, False, boundary['right'], 'row', violations)
    _check_fan(instance, S2, True, boundary['top'], 'column', violations)
    _check_fan(instance, S1, False, boundary['bottom'], 'column', violations)

    return StructureReport(violations=tuple(violations), notes=tuple(notes))


def check_wrap_forcing(instance: Instance, layout: DirectedLayout) -> StructureReport:
    """Check that the unit demand of the corollary instance can only be
    routed through the wrap arcs.

    For every split of the grid into columns ``1..i`` (with ``s1``) and the
    rest, the wrap arc from column ``i + 1`` to column ``i`` must be the only
    arc going back to the left, and the unit demand must cross the split,
    which makes the backward cut tight.
    """
    metadata = instance.metadata
    if metadata.get('variant') != 'corollary':
        raise PreconditionError(hardpaths_err_header(obj_name='check_wrap_forcing') + "expected an instance produced by corollary_transform.")
    registry = layout.registry
    graph = instance.graph
    wraps = list(metadata['wrap_arcs'])
    violations, notes = [], []

    if len(wraps) != layout.columns - 1:
        violations.append(Finding('wrap-count', f"{len(wraps)} wrap arcs for {layout.columns} columns."))

    unit = [cls for cls in instance.demands if cls.name == WRAP_DEMAND]
    if len(unit) != 1 or unit[0].count != 1:
        violations.append(Finding('wrap-demand', "expected exactly one unit demand on the wrap arcs."))
        return StructureReport(violations=tuple(violations), notes=tuple(notes))
    unit = unit[0]

    everything = frozenset(graph.vertices)
    for i in range(1, layout.columns):
        left = registry.columns_upto(i) | {S1}
        backward = sorted(e for e, (u, v) in graph.edges.items() if u not in left and v in left)
        if i <= len(wraps) and backward != [wraps[i - 1]]:
            violations.append(Finding('wrap-forcing', f"the arcs back into columns 1..{i} are {backward}, expected the wrap arc {wraps[i - 1]} alone."))
        if not (unit.sources <= everything - left and unit.sinks <= left):
            violations.append(Finding('wrap-forcing', f"the unit demand does not cross the split after column {i}."))
            continue
        report = is_tight(instance, everything - left)
        if report.verdict is not True:
            violations.append(Finding('tightness', f"the backward cut after column {i} has slack {report.slack}."))

    if not _core_is_acyclic(instance, (S1, S2), excluded_edges=wraps):
        violations.append(Finding('acyclic', "the grid has a directed cycle besides the wrap arcs."))

    _check_tight(instance, frozenset((S1,)), S1, violations, notes)
    _check_tight(instance, everything - {S2}, f"V - {S2}", violations, notes)

    return StructureReport(violations=tuple(violations), notes=tuple(notes))


def validate_directed(instance: Instance, layout: DirectedLayout) -> StructureReport:
    variant = instance.metadata.get('variant')
    if variant == 'full':
        return claim5_check(instance, layout)
    elif variant == 'identified':
        return check_identified(instance, layout)
    elif variant == 'corollary':
        return check_wrap_forcing(instance, layout)
    else:
        raise PreconditionError(hardpaths_err_header(obj_name='validate_directed') + f"unknown variant {variant!r} of the acyclic reduction.")
