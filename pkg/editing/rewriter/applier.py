from __future__ import annotations

from typing import List, Dict, Any

from hardpaths.graphs import Instance, DemandClass, RotationGraphBuilder
from .applicationpoint import ApplicationPoint


class InstanceDraft(object):
    """The mutable form of an ``Instance`` that ``Applier``s operate on."""

    def __init__(self, builder: RotationGraphBuilder, demands: List[DemandClass], metadata: Dict[str, Any]):
        super(InstanceDraft, self).__init__()
        self.builder = builder
        self.demands = demands
        self.metadata = metadata

    @staticmethod
    def from_instance(instance: Instance) -> InstanceDraft:
        return InstanceDraft(RotationGraphBuilder.from_graph(instance.graph), list(instance.demands), dict(instance.metadata))

    def build(self) -> Instance:
        return Instance(self.builder.build(), self.demands, self.metadata)


class Applier(object):

    def __init__(self):
        super(Applier, self).__init__()
        self._counter: int = 0  # use `self._counter` to distinguish applications

    def _apply(self, draft: InstanceDraft, ap: ApplicationPoint, id_: str) -> None:
        # use `id_` to label the vertices and edges created
        raise NotImplementedError

    def apply(self, draft: InstanceDraft, ap: ApplicationPoint, id_: str) -> None:

        # create a unique application identifier
        self._counter += 1
        id_ = id_ + f'[{str(self._counter)}]'

        # modify the draft
        self._apply(draft, ap, id_)
