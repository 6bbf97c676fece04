from .applicationpoint import ApplicationPoint
from .finder import Finder
from .applier import InstanceDraft, Applier
from .rewriter import Rewriter
