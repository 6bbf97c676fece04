from __future__ import annotations

from typing import NamedTuple, List, Union, Optional

from hardpaths.graphs import Instance
from .applicationpoint import ApplicationPoint
from .finder import Finder
from .applier import InstanceDraft, Applier
from ..baseeditor import BaseEditor
from hardpaths.utils import hardpaths_err_header


# -- CONTEXTUALISED APPLICATION POINTS -- #

class Context(NamedTuple):

    rewriter: Rewriter
    instance: Instance

    def __eq__(self, other) -> bool:
        return isinstance(other, Context) and (self.rewriter is other.rewriter) and (self.instance is other.instance)


class ApplicationPointWithContext(NamedTuple):
    """Each application point must have been found by a specific ``Rewriter``
    on a specific ``Instance``.
    """
    ap:      ApplicationPoint
    context: Context


# -- REWRITER -- #

class Rewriter(BaseEditor):
    """Base ``Editor`` representing a graph rewriting rule."""

    def __init__(self,
                 name:    str,
                 finder:  Finder,
                 applier: Applier):

        super(Rewriter, self).__init__(name)
        self._finder = finder
        self._applier = applier

    def find(self, instance: Instance) -> List[ApplicationPointWithContext]:
        aps = self._finder.find(instance)
        apcontexts = list(map(lambda ap: ApplicationPointWithContext(ap=ap, context=Context(rewriter=self, instance=instance)), aps))  # bind each application point to this `Rewriter` and the argument `Instance`
        return apcontexts

    def apply(self, instance: Instance, apcontexts: Optional[Union[ApplicationPointWithContext, List[ApplicationPointWithContext]]] = None, *args, **kwargs) -> Instance:

        # validate application point contexts argument
        # check type
        if not ((apcontexts is None) or isinstance(apcontexts, ApplicationPointWithContext) or (isinstance(apcontexts, list) and all(map(lambda apc: isinstance(apc, ApplicationPointWithContext), apcontexts)))):
            raise TypeError(hardpaths_err_header(obj_name=self.__class__.__name__) + "expected application points returned by `find`.")
        # canonicalise
        if apcontexts is None:
            apcontexts = self.find(instance)
        elif isinstance(apcontexts, ApplicationPointWithContext):
            apcontexts = [apcontexts]
        # verify that the context is correct
        this_context = Context(rewriter=self, instance=instance)
        if not all(map(lambda apc: apc.context == this_context, apcontexts)):
            raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + "some application points were found by another Rewriter or on another Instance.")
        # verify that the application points commute
        if not self._finder.check_aps_commutativity(list(map(lambda apc: apc.ap, apcontexts))):
            raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + "the application points overlap.")

        if len(apcontexts) == 0:
            return instance

        # rewrite all the application points on one draft, then freeze it
        draft = InstanceDraft.from_instance(instance)
        for apc in apcontexts:
            self._applier.apply(draft, apc.ap, self.id_)

        return draft.build()
