from typing import Union, Optional, Iterable, Dict, List, Tuple, Sequence, FrozenSet, Any

from hardpaths.gadgets import Gadget
from hardpaths.graphs import RotationGraph, Instance, Routing
from hardpaths.grids import CutRegistry


# one colour per demand class, cycled
PALETTE = ('red3', 'blue3', 'forestgreen', 'darkorange', 'purple3', 'gold3', 'deeppink3', 'cyan4')

DotTarget = Union[RotationGraph, Instance, Gadget]

# (identifier, caption, member vertices)
Cluster = Tuple[str, str, Iterable[str]]


def registry_clusters(registry: CutRegistry) -> List[Cluster]:
    """One cluster per grid cell, row by row."""
    return [(f"cluster_{c}_{r}", f"{registry.kind(c, r)} ({c},{r})", registry.cell_vertices(c, r))
            for r in range(1, registry.rows + 1) for c in range(1, registry.columns + 1)]


def layout_clusters(layout: Dict[str, Any]) -> List[Cluster]:
    """The cell clusters recorded in the ``layout`` section of an instance
    document."""
    return [(f"cluster_{cell['column']}_{cell['row']}", f"{cell['kind']} ({cell['column']},{cell['row']})", cell['vertices'])
            for cell in layout['cells']]


def _quote(name: str) -> str:
    return '"' + name.replace('\\', '\\\\').replace('"', '\\"') + '"'


def _attributes(attributes: Dict[str, str]) -> str:
    if len(attributes) == 0:
        return ''
    return ' [' + ', '.join(f"{key}={value}" for key, value in attributes.items()) + ']'


def _ports(target: DotTarget, graph: RotationGraph) -> FrozenSet[str]:
    if isinstance(target, Gadget):
        return frozenset(target.ports.vertices())
    return frozenset(v for v in graph.vertices if graph.degree(v) == 1)


def _vertex_line(graph: RotationGraph, v: str, ports: FrozenSet[str], indent: str) -> str:
    attributes = {}
    if v in ports:
        attributes['shape'] = 'box'
    elif (not graph.directed) and (not graph.is_noncrossing(v)):
        attributes['style'] = 'bold'
    if v in graph.positions:
        x, y = graph.positions[v]
        attributes['pos'] = f'"{x:g},{y:g}!"'
    return indent + _quote(v) + _attributes(attributes) + ';'


def export_dot(target:   DotTarget,
               routing:  Optional[Routing] = None,
               clusters: Optional[Sequence[Cluster]] = None,
               name:     str = 'G') -> str:
    """Render a graph, an instance or a gadget in the DOT language.

    Crossing vertices of undirected graphs are drawn bold and port stubs
    (gadget ports, or degree-one vertices) as boxes. A ``routing`` colours
    its edges with one colour per demand class; ``clusters`` (see
    ``registry_clusters``) group vertices into boxed subgraphs. Vertices
    and edges are written in graph order.
    """
    graph = target if isinstance(target, RotationGraph) else target.graph
    ports = _ports(target, graph)

    colour = {}
    if routing is not None:
        for path in routing:
            for e in path.edges:
                colour[e] = PALETTE[path.demand % len(PALETTE)]

    lines: List[str] = [('digraph ' if graph.directed else 'graph ') + _quote(name) + ' {']

    clustered = set()
    for identifier, caption, members in (clusters if clusters is not None else ()):
        members = frozenset(members)
        lines.append(f"  subgraph {identifier} {{")
        lines.append(f"    label={_quote(caption)};")
        for v in graph.vertices:
            if v in members and v not in clustered:
                lines.append(_vertex_line(graph, v, ports, '    '))
                clustered.add(v)
        lines.append('  }')

    for v in graph.vertices:
        if v not in clustered:
            lines.append(_vertex_line(graph, v, ports, '  '))

    connector = ' -> ' if graph.directed else ' -- '
    for e, (u, v) in graph.edges.items():
        attributes = {}
        if e in colour:
            attributes['color'] = colour[e]
            attributes['penwidth'] = '2'
        lines.append('  ' + _quote(u) + connector + _quote(v) + _attributes(attributes) + ';')

    lines.append('}')
    return '\n'.join(lines) + '\n'
