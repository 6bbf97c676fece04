"""Reading and writing the artefacts of HardPaths.

Formulas come in as DIMACS CNF; instances, routings and search results go
in and out as versioned JSON documents; graphs, gadgets and routings are
exported to the DOT language.

"""

from .dimacs import parse_dimacs, format_dimacs
from .documents import FORMAT_PREFIX, VERSION, DOCUMENT_KINDS, Document, check_header, document_kind
from .documents import graph_to_dict, graph_from_dict, layout_to_dict
from .documents import instance_to_document, instance_from_document, routing_to_document, routing_from_document
from .documents import result_to_document, result_from_document, write_text, write_document, read_document
from .dot import PALETTE, Cluster, registry_clusters, layout_clusters, export_dot
