"""
Layered words of elementary 2-cobordisms, their normal forms and Cerf moves.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from app.models.base_model import BaseModel


class Generator(str, Enum):
    """Elementary cobordisms with their (inputs, outputs) arities"""

    ID = "id"
    SWAP = "swap"
    CUP = "cup"
    CAP = "cap"
    MUL = "mul"
    COMUL = "comul"

    @property
    def inputs(self) -> int:
        return _ARITIES[self][0]

    @property
    def outputs(self) -> int:
        return _ARITIES[self][1]

    @property
    def euler(self) -> int:
        return _EULER[self]


_ARITIES = {
    Generator.ID: (1, 1),
    Generator.SWAP: (2, 2),
    Generator.CUP: (0, 1),
    Generator.CAP: (1, 0),
    Generator.MUL: (2, 1),
    Generator.COMUL: (1, 2),
}

_EULER = {
    Generator.ID: 0,
    Generator.SWAP: 0,
    Generator.CUP: 1,
    Generator.CAP: 1,
    Generator.MUL: -1,
    Generator.COMUL: -1,
}

Layer = Tuple[Generator, ...]


def layer_inputs(layer: Layer) -> int:
    return sum(g.inputs for g in layer)


def layer_outputs(layer: Layer) -> int:
    return sum(g.outputs for g in layer)


@dataclass(frozen=True, repr=False)
class CobordismWord(BaseModel):
    """
    A composition of layers, first layer first.

    Each layer is a tensor product of generators acting left to right on
    consecutive strands. Values are only built through the cobordism service,
    which checks the width chain.
    """

    layers: Tuple[Layer, ...]
    in_width: int
    out_width: int

    def boundary_widths(self) -> Tuple[int, ...]:
        """Strand counts before the first layer, between layers, and after the last."""
        widths = [self.in_width]
        for layer in self.layers:
            widths.append(layer_outputs(layer))
        return tuple(widths)

    def state_widths(self) -> Tuple[int, ...]:
        """Strand counts before the first generator and after each one, layers read left to right."""
        widths = [self.in_width]
        for layer in self.layers:
            pending = layer_inputs(layer)
            produced = 0
            for g in layer:
                pending -= g.inputs
                produced += g.outputs
                widths.append(produced + pending)
        return tuple(widths)

    def __str__(self) -> str:
        return " ; ".join(" , ".join(g.value for g in layer) for layer in self.layers)


@dataclass(frozen=True, repr=False)
class OpenComponent(BaseModel):
    genus: int
    inputs: Tuple[int, ...]
    outputs: Tuple[int, ...]

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus - len(self.inputs) - len(self.outputs)


@dataclass(frozen=True, repr=False)
class ClosedComponent(BaseModel):
    genus: int

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus


@dataclass(frozen=True, repr=False)
class NormalForm(BaseModel):
    """Connected components of a cobordism with their genus and boundary circles"""

    open_components: Tuple[OpenComponent, ...]
    closed_components: Tuple[ClosedComponent, ...]
    in_width: int
    out_width: int

    @property
    def component_count(self) -> int:
        return len(self.open_components) + len(self.closed_components)

    @property
    def euler(self) -> int:
        return sum(c.euler for c in self.open_components) + sum(c.euler for c in self.closed_components)


class MoveKind(str, Enum):
    """Local rewrites between Morse decompositions of the same surface"""

    # identity layers
    ID_INSERT = "id_insert"
    ID_REMOVE = "id_remove"
    # unit and counit cancellation, and their inverses
    UNIT_LEFT = "unit_left"
    UNIT_RIGHT = "unit_right"
    COUNIT_LEFT = "counit_left"
    COUNIT_RIGHT = "counit_right"
    UNIT_LEFT_INTRO = "unit_left_intro"
    UNIT_RIGHT_INTRO = "unit_right_intro"
    COUNIT_LEFT_INTRO = "counit_left_intro"
    COUNIT_RIGHT_INTRO = "counit_right_intro"
    # Frobenius relation
    FROB_LEFT = "frob_left"
    FROB_RIGHT = "frob_right"
    FROB_LEFT_INV = "frob_left_inv"
    FROB_RIGHT_INV = "frob_right_inv"
    # symmetric structure
    SWAP_SWAP = "swap_swap"
    SWAP_MUL = "swap_mul"
    COMUL_SWAP = "comul_swap"


@dataclass(frozen=True, repr=False)
class CerfMove(BaseModel):
    """
    A move applied at (layer, offset).

    ``offset`` is the index, inside layer ``layer``, of the first generator of
    the move's pattern. Identity-layer insertion ignores it and inserts before
    layer ``layer`` (``layer`` may equal the number of layers).
    """

    kind: MoveKind
    layer: int
    offset: int = 0

    def __str__(self) -> str:
        return f"{self.kind.value}@{self.layer}:{self.offset}"
