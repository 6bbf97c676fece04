from hardpaths.graphs import Instance


class Editor(object):

    def __init__(self):
        super(Editor, self).__init__()

    def apply(self, instance: Instance, *args, **kwargs) -> Instance:
        raise NotImplementedError

    def __call__(self, instance: Instance, *args, **kwargs) -> Instance:
        return self.apply(instance, *args, **kwargs)
