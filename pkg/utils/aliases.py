from typing import NewType


# for verdicts that cannot be decided from the available information
UnknownType = NewType('UnknownType', type(None))
UNKNOWN = UnknownType(None)
