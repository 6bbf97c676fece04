"""Rewriting machinery for routing instances.

An ``Editor`` maps an ``Instance`` to a new ``Instance``. A ``Rewriter`` is
an ``Editor`` split into a ``Finder``, which returns the application
points of a rule, and an ``Applier``, which rewrites one application point
on a mutable ``InstanceDraft``. ``ComposedEditor``s chain editors.

The rewriters defined here split non-crossing vertices into 4-cycles,
merge or remove terminals, and insert arcs.

"""

#                      Editor                                                     #
#                        /\                                                       #
#                       /  \                                                      #
#          BaseEditor _/    \_ ComposedEditor                                     #
#              |                                                                  #
#              |_ Rewriter                                                        #
#                    |_ ApplicationPoint + Context = ApplicationPointWithContext  #
#                    |_ Finder                                                    #
#                    |_ Applier (on an InstanceDraft)                             #

from .editor import Editor
from .baseeditor import BaseEditor
from .composededitor import ComposedEditor
from .rewriter import ApplicationPoint, Finder, InstanceDraft, Applier, Rewriter
from .expansion import NonCrossingVertex, NonCrossingFinder, NonCrossingSplitter, NonCrossingExpander
from .expansion import expand_noncrossing, expand_instance
from .terminals import TerminalMerge, TerminalMergeFinder, TerminalMerger, TerminalIdentifier
from .terminals import TerminalRemoval, TerminalRemovalFinder, TerminalRemover, TerminalStripper
from .terminals import NewArc, NewArcFinder, NewArcApplier, ArcInserter
