"""Variants of the compiled acyclic instance.

``identify_terminals`` merges ``t1`` into ``s2`` and ``t2`` into ``s1``,
which leaves two terminals and two opposite demand classes.
``corollary_transform`` removes ``t1`` and ``t2``, joins the bottom of each
column to the top of the column on its left, and asks for one path from
the top of the rightmost column to the bottom of the leftmost one.
"""

from typing import List, Tuple

from .layout import S1, S2, T1, T2
from hardpaths.editing import ComposedEditor, TerminalIdentifier, TerminalStripper, ArcInserter
from hardpaths.graphs import DemandClass, Instance
from hardpaths.reductions.undirected import terminal_edge
from hardpaths.utils import hardpaths_err_header
from hardpaths.utils import PreconditionError


WRAP_DEMAND = 'wrap'


def _check_full(instance: Instance, obj_name: str) -> None:
    metadata = instance.metadata
    if metadata.get('reduction') != 'directed' or metadata.get('variant') != 'full':
        raise PreconditionError(hardpaths_err_header(obj_name=obj_name) + "expected an instance produced by compile_full.")


def identify_terminals(instance: Instance) -> Instance:
    _check_full(instance, 'identify_terminals')
    identified = TerminalIdentifier([(T1, S2), (T2, S1)])(instance)
    metadata = dict(identified.metadata)
    metadata['variant'] = 'identified'
    metadata['terminals'] = {'s1': S1, 's2': S2, 't1': S2, 't2': S1}
    return Instance(identified.graph, identified.demands, metadata)


def wrap_arcs(instance: Instance) -> List[Tuple[str, str, str]]:
    """The arcs from the bottom of each column to the top of the column on
    its left, as ``(edge, tail, head)``."""
    top, bottom = instance.metadata['top'], instance.metadata['bottom']
    return [(terminal_edge(bottom[k], top[k - 1]), bottom[k], top[k - 1]) for k in range(1, len(top))]


def corollary_transform(instance: Instance) -> Instance:
    _check_full(instance, 'corollary_transform')
    arcs = wrap_arcs(instance)
    editor = ComposedEditor([TerminalStripper([T1, T2]), ArcInserter(arcs)])
    transformed = editor(instance)

    top, bottom = instance.metadata['top'], instance.metadata['bottom']
    demands = list(transformed.demands) + [DemandClass.of(top[-1], bottom[0], count=1, name=WRAP_DEMAND)]
    metadata = dict(transformed.metadata)
    metadata['variant'] = 'corollary'
    metadata['terminals'] = {'s1': S1, 's2': S2}
    metadata['wrap_arcs'] = [e for e, _, _ in arcs]
    return Instance(transformed.graph, demands, metadata)
