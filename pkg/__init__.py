"""HardPaths: gadgets, reductions and an exhaustive oracle for edge-disjoint
paths with few demand classes.

The package partitions its abstractions into the following namespaces:
* the ``graphs`` sub-package implements rotation graphs, routing instances,
  cuts, crossings and the validation of routings;
* the ``gadgets`` and ``grids`` sub-packages build the gadget graphs of the
  reductions and stitch them into grids whose cuts stay addressable;
* the ``solver`` sub-package implements the exhaustive search that decides,
  exhibits or enumerates routings;
* the ``reductions`` sub-package compiles CNF formulas into planar
  undirected and into acyclic directed instances, and routes them from
  satisfying assignments;
* the ``harness`` sub-package checks the gadget and grid properties the
  reductions rely on;
* the ``serialization`` and ``cli`` sub-packages read and write formulas,
  instances, routings and results, and expose everything on the command
  line.

The ``editing`` sub-package rewrites instances (for example, it expands
non-crossing vertices into 4-cycles); ``utils`` is meant for developers.

"""
