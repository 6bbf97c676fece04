from hardpaths.graphs import Instance
from .editor import Editor


class BaseEditor(Editor):

    def __init__(self, name: str):
        super(BaseEditor, self).__init__()
        self._id: str = name  # labels the vertices and edges created by this `Editor`

    @property
    def id_(self) -> str:
        return self._id

    def apply(self, instance: Instance, *args, **kwargs) -> Instance:
        raise NotImplementedError
