"""JSON documents for instances, routings and search results.

Every document starts with ``{"format": "hardpaths/<kind>", "version": 1}``.
Vertices keep their order, rotations and positions, so that reading a
written instance gives back an equal one.
"""

import json
import os
import tempfile
from typing import Dict, Any, List, Optional, Union

from hardpaths.graphs import RotationGraph, RotationGraphBuilder, DemandClass, Instance, Path, Routing
from hardpaths.grids import CutRegistry
from hardpaths.solver import SolveStatus, SolveStats, SolveResult
from hardpaths.utils import hardpaths_err_header


FORMAT_PREFIX = 'hardpaths/'
VERSION = 1
DOCUMENT_KINDS = ('instance', 'routing', 'result')

Document = Dict[str, Any]


def _header(kind: str) -> Document:
    return {'format': FORMAT_PREFIX + kind, 'version': VERSION}


def check_header(document: Document, kind: str) -> Document:
    if not isinstance(document, dict):
        raise ValueError(hardpaths_err_header(obj_name='check_header') + f"a {kind} document must be a JSON object.")
    if document.get('format') != FORMAT_PREFIX + kind:
        raise ValueError(hardpaths_err_header(obj_name='check_header') + f"expected a {FORMAT_PREFIX + kind} document, found {document.get('format')!r}.")
    if document.get('version') != VERSION:
        raise ValueError(hardpaths_err_header(obj_name='check_header') + f"unsupported document version {document.get('version')!r}; this reader understands version {VERSION}.")
    return document


def document_kind(document: Document) -> str:
    """The kind named by the ``format`` field of ``document``."""
    fmt = document.get('format', '') if isinstance(document, dict) else ''
    kind = fmt[len(FORMAT_PREFIX):] if fmt.startswith(FORMAT_PREFIX) else ''
    if kind not in DOCUMENT_KINDS:
        raise ValueError(hardpaths_err_header(obj_name='document_kind') + f"not a HardPaths document (format {fmt!r}).")
    return kind


# -- GRAPHS AND INSTANCES -- #

def graph_to_dict(graph: RotationGraph) -> Dict[str, Any]:
    vertices = []
    for v in graph.vertices:
        entry = {'id': v, 'rotation': list(graph.rotation[v])}
        if v in graph.labels:
            entry['label'] = graph.labels[v]
        if v in graph.positions:
            entry['position'] = list(graph.positions[v])
        vertices.append(entry)

    edges = []
    for e, (u, v) in graph.edges.items():
        entry = {'id': e, 'u': u, 'v': v}
        if e in graph.labels:
            entry['label'] = graph.labels[e]
        edges.append(entry)

    return {'directed': graph.directed, 'vertices': vertices, 'edges': edges, 'noncrossing': sorted(graph.noncrossing)}


def graph_from_dict(data: Dict[str, Any]) -> RotationGraph:
    builder = RotationGraphBuilder(directed=bool(data['directed']))
    for entry in data['vertices']:
        position = tuple(float(c) for c in entry['position']) if 'position' in entry else None
        builder.add_vertex(entry['id'], label=entry.get('label'), position=position)
    for entry in data['edges']:
        builder.add_edge(entry['id'], entry['u'], entry['v'], label=entry.get('label'))
    for entry in data['vertices']:
        builder.set_rotation(entry['id'], entry['rotation'])
    builder.set_noncrossing(data['noncrossing'])
    return builder.build()


def layout_to_dict(registry: CutRegistry) -> Dict[str, Any]:
    """The cells (kind and vertices), the cuts and the boundary stubs of a
    grid."""
    return {
        'columns':    registry.columns,
        'rows':       registry.rows,
        'cells':      [{'column': c, 'row': r, 'kind': registry.kind(c, r), 'vertices': sorted(registry.cell_vertices(c, r))} for r in range(1, registry.rows + 1) for c in range(1, registry.columns + 1)],
        'vertical':   [list(registry.vertical(i)) for i in range(1, registry.columns)],
        'horizontal': [list(registry.horizontal(j)) for j in range(1, registry.rows)],
        'boundary':   {side: list(stubs) for side, stubs in registry.boundary.items()},
    }


def instance_to_document(instance: Instance, registry: Optional[CutRegistry] = None) -> Document:
    """``registry``, when given, adds a ``layout`` section; readers ignore
    it."""
    document = _header('instance')
    document['graph'] = graph_to_dict(instance.graph)
    document['demands'] = [{'name':            cls.name,
                            'sources':         sorted(cls.sources),
                            'sinks':           sorted(cls.sinks),
                            'count':           cls.count,
                            'crossing_exempt': cls.crossing_exempt} for cls in instance.demands]
    document['metadata'] = dict(instance.metadata)
    if registry is not None:
        document['layout'] = layout_to_dict(registry)
    return document


def instance_from_document(document: Document) -> Instance:
    check_header(document, 'instance')
    graph = graph_from_dict(document['graph'])
    demands = [DemandClass.of(entry['sources'], entry['sinks'], count=entry['count'],
                              crossing_exempt=entry.get('crossing_exempt', False), name=entry.get('name', '')) for entry in document['demands']]
    return Instance(graph, demands, document.get('metadata', {}))


# -- ROUTINGS AND RESULTS -- #

def _paths_to_list(routing: Routing) -> List[Dict[str, Any]]:
    return [{'demand': path.demand, 'start': path.start, 'edges': list(path.edges)} for path in routing]


def _paths_from_list(paths: List[Dict[str, Any]]) -> Routing:
    return Routing(Path(demand=int(entry['demand']), edges=tuple(entry['edges']), start=entry['start']) for entry in paths)


def routing_to_document(routing: Routing) -> Document:
    document = _header('routing')
    document['paths'] = _paths_to_list(routing)
    return document


def routing_from_document(document: Document) -> Routing:
    check_header(document, 'routing')
    return _paths_from_list(document['paths'])


def result_to_document(result: SolveResult) -> Document:
    document = _header('result')
    document['status'] = result.status.value
    document['stats'] = result.stats._asdict()
    document['witnesses'] = [_paths_to_list(routing) for routing in result.witnesses]
    return document


def result_from_document(document: Document) -> SolveResult:
    check_header(document, 'result')
    return SolveResult(status=SolveStatus(document['status']),
                       witnesses=tuple(_paths_from_list(paths) for paths in document['witnesses']),
                       stats=SolveStats(**document['stats']))


# -- FILES -- #

def write_text(path: Union[str, os.PathLike], text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file in the same
    directory, so that readers never see a partial file."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix='.hardpaths-', suffix='.tmp')
    try:
        with os.fdopen(fd, 'w') as fp:
            fp.write(text)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


def write_document(path: Union[str, os.PathLike], document: Document) -> None:
    write_text(path, json.dumps(document, indent=1) + '\n')


def read_document(path: Union[str, os.PathLike]) -> Document:
    with open(path, 'r') as fp:
        try:
            document = json.load(fp)
        except json.JSONDecodeError as e:
            raise ValueError(hardpaths_err_header(obj_name='read_document') + f"{path} is not valid JSON: {e}.")
    document_kind(document)
    return document
