from typing import List

from hardpaths.graphs import Instance
from .applicationpoint import ApplicationPoint


class Finder(object):

    def find(self, instance: Instance) -> List[ApplicationPoint]:
        raise NotImplementedError

    def check_aps_commutativity(self, aps: List[ApplicationPoint]) -> bool:
        """Verify that the application points do not overlap.

        Passing this test ensures that the rewritings of the different
        application points commute, so that all of them can be applied to
        the same draft without searching again in-between.

        """
        raise NotImplementedError
