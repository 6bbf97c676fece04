from typing import List

from hardpaths.graphs import Instance
from .editor import Editor
from hardpaths.utils import hardpaths_err_header


class ComposedEditor(Editor):
    """``Editor`` applying a sequence of editing steps to the target instance."""

    def __init__(self, children_editors: List[Editor]):

        # validate input
        if not (isinstance(children_editors, list) and all(map(lambda editor: isinstance(editor, Editor), children_editors))):
            raise TypeError(hardpaths_err_header(obj_name=self.__class__.__name__) + "expected a list of Editors.")

        super(ComposedEditor, self).__init__()
        self._children_editors = children_editors

    def apply(self, instance: Instance, *args, **kwargs) -> Instance:

        for editor in self._children_editors:
            instance = editor(instance, *args, **kwargs)

        return instance
