from enum import Enum
from typing import Tuple, Union, Sequence

from hardpaths.gadgets import Gadget, build_gadget
from hardpaths.utils import hardpaths_err_header


CellSpecType = Union[Gadget, str]


def resolve_gadget_cellspec(cellspec: Gadget) -> Gadget:
    return cellspec


def resolve_str_cellspec(cellspec: str) -> Gadget:
    return build_gadget(cellspec)


CellSpecSolvers = Enum('CellSpecSolvers',
                       [
                           ('GADGET', resolve_gadget_cellspec),
                           ('STR',    resolve_str_cellspec),
                       ])


def resolve_cellspec(cellspec: CellSpecType) -> Gadget:
    """Turn a grid cell specification into a gadget: either a gadget kind
    (``'XCH'``, ``'yes'``, ...) or an already assembled ``Gadget``."""

    cellspec_class = cellspec.__class__.__name__.upper()
    try:
        solver = getattr(CellSpecSolvers, cellspec_class)
    except AttributeError:
        raise TypeError(hardpaths_err_header(obj_name='resolve_cellspec') + f"unsupported cell specification type: {cellspec_class}.")

    return solver(cellspec)


class GridSpec(object):
    """A rectangular arrangement of gadgets.

    ``layout`` lists the rows from top to bottom, each row listing its
    cells from left to right. Cells are addressed as ``(column, row)``,
    both starting at 1.
    """

    def __init__(self, layout: Sequence[Sequence[CellSpecType]]):

        super(GridSpec, self).__init__()

        rows = [tuple(row) for row in layout]
        if len(rows) == 0 or len(rows[0]) == 0:
            raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + "the layout must have at least one cell.")
        widths = set(len(row) for row in rows)
        if len(widths) != 1:
            raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"the layout is ragged: rows have {sorted(widths)} cells.")

        self._layout = tuple(rows)
        self._gadgets = tuple(tuple(resolve_cellspec(cell) for cell in row) for row in rows)

        families = set(gadget.directed for row in self._gadgets for gadget in row)
        if len(families) != 1:
            raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + "directed and undirected gadgets cannot share a grid.")

    @classmethod
    def uniform(cls, kind: CellSpecType, columns: int, rows: int) -> 'GridSpec':
        return cls([[kind] * columns for _ in range(0, rows)])

    @property
    def columns(self) -> int:
        return len(self._layout[0])

    @property
    def rows(self) -> int:
        return len(self._layout)

    @property
    def directed(self) -> bool:
        return self._gadgets[0][0].directed

    def check_cell(self, column: int, row: int) -> None:
        if not (1 <= column <= self.columns and 1 <= row <= self.rows):
            raise ValueError(hardpaths_err_header(obj_name=self.__class__.__name__) + f"cell ({column},{row}) lies outside the {self.columns} x {self.rows} grid.")

    def gadget(self, column: int, row: int) -> Gadget:
        self.check_cell(column, row)
        return self._gadgets[row - 1][column - 1]

    def kind(self, column: int, row: int) -> str:
        return self.gadget(column, row).kind

    def cells(self) -> Tuple[Tuple[int, int], ...]:
        """All the cell coordinates, row by row."""
        return tuple((c, r) for r in range(1, self.rows + 1) for c in range(1, self.columns + 1))

    def count(self, kind: str) -> int:
        return sum(1 for c, r in self.cells() if self.kind(c, r) == kind)

    def __str__(self) -> str:
        return '\n'.join(' '.join(f"{gadget.kind:>4}" for gadget in row) for row in self._gadgets)
