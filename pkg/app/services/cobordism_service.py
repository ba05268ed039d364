import random
import re
from typing import Dict, List, Optional, Sequence, Tuple

from app.config.constants import GENERATOR_SEPARATOR, LAYER_SEPARATOR
from app.exceptions import PatternMismatchException, WidthMismatchException, WordSyntaxException
from app.models.cobordism import (
    CerfMove,
    ClosedComponent,
    CobordismWord,
    Generator,
    Layer,
    MoveKind,
    NormalForm,
    OpenComponent,
    layer_inputs,
    layer_outputs,
)
from app.utils.tracing import get_trace_logger

logger = get_trace_logger("cobordism-service")

_TOKEN = re.compile(r"(?P<space>\s+)|(?P<word>[A-Za-z_][A-Za-z0-9_]*)|(?P<sep>[;,])|(?P<other>.)", re.DOTALL)

ID, SWAP, CUP, CAP, MUL, COMUL = (
    Generator.ID,
    Generator.SWAP,
    Generator.CUP,
    Generator.CAP,
    Generator.MUL,
    Generator.COMUL,
)

# kind -> (top pattern, bottom pattern, replacement layers)
_TWO_LAYER_MOVES: Dict[MoveKind, Tuple[Layer, Layer, Tuple[Layer, ...]]] = {
    MoveKind.UNIT_LEFT: ((CUP, ID), (MUL,), ((ID,),)),
    MoveKind.UNIT_RIGHT: ((ID, CUP), (MUL,), ((ID,),)),
    MoveKind.COUNIT_LEFT: ((COMUL,), (CAP, ID), ((ID,),)),
    MoveKind.COUNIT_RIGHT: ((COMUL,), (ID, CAP), ((ID,),)),
    MoveKind.FROB_LEFT: ((COMUL, ID), (ID, MUL), ((MUL,), (COMUL,))),
    MoveKind.FROB_RIGHT: ((ID, COMUL), (MUL, ID), ((MUL,), (COMUL,))),
    MoveKind.FROB_LEFT_INV: ((MUL,), (COMUL,), ((COMUL, ID), (ID, MUL))),
    MoveKind.FROB_RIGHT_INV: ((MUL,), (COMUL,), ((ID, COMUL), (MUL, ID))),
    MoveKind.SWAP_SWAP: ((SWAP,), (SWAP,), ((ID, ID),)),
    MoveKind.SWAP_MUL: ((SWAP,), (MUL,), ((MUL,),)),
    MoveKind.COMUL_SWAP: ((COMUL,), (SWAP,), ((COMUL,),)),
}

# kind -> (pattern, replacement layers)
_ONE_LAYER_MOVES: Dict[MoveKind, Tuple[Layer, Tuple[Layer, ...]]] = {
    MoveKind.UNIT_LEFT_INTRO: ((ID,), ((CUP, ID), (MUL,))),
    MoveKind.UNIT_RIGHT_INTRO: ((ID,), ((ID, CUP), (MUL,))),
    MoveKind.COUNIT_LEFT_INTRO: ((ID,), ((COMUL,), (CAP, ID))),
    MoveKind.COUNIT_RIGHT_INTRO: ((ID,), ((COMUL,), (ID, CAP))),
}


def _ids(n: int) -> Layer:
    return (ID,) * n


def _has_non_id(layer: Layer) -> bool:
    return any(g is not ID for g in layer)


class CobordismService:
    """Cobordism words: parsing, Euler characteristic, normal form and Cerf moves"""

    # ===== CONSTRUCTION =====

    def make_word(self, layers: Sequence[Sequence[Generator]]) -> CobordismWord:
        """
        Build a word from layers, checking the width chain.

        Raises:
            WidthMismatchException: a layer's inputs differ from the previous layer's outputs
        """
        frozen = tuple(tuple(layer) for layer in layers)
        if not frozen or any(not layer for layer in frozen):
            raise WordSyntaxException(1, 1, "empty layer")
        width = layer_inputs(frozen[0])
        in_width = width
        for index, layer in enumerate(frozen):
            needed = layer_inputs(layer)
            if needed != width:
                raise WidthMismatchException(index + 1, width, needed)
            width = layer_outputs(layer)
        return CobordismWord(layers=frozen, in_width=in_width, out_width=width)

    def parse_word(self, text: str) -> CobordismWord:
        """
        Parse ``word := layer (";" layer)*``, ``layer := gen ("," gen)*``.

        Raises:
            WordSyntaxException: with 1-based line and column of the offending token
            WidthMismatchException: the width chain breaks
        """
        layers: List[List[Generator]] = [[]]
        expect_generator = True
        for match in _TOKEN.finditer(text):
            kind = match.lastgroup
            token = match.group()
            if kind == "space":
                continue
            line, col = self._position(text, match.start())
            if kind == "word":
                if not expect_generator:
                    raise WordSyntaxException(line, col, repr(token))
                try:
                    layers[-1].append(Generator(token))
                except ValueError:
                    raise WordSyntaxException(line, col, repr(token))
                expect_generator = False
            elif kind == "sep" and not expect_generator:
                if token == LAYER_SEPARATOR:
                    layers.append([])
                expect_generator = True
            else:
                raise WordSyntaxException(line, col, repr(token))
        if expect_generator:
            line, col = self._position(text, len(text))
            raise WordSyntaxException(line, col, "end of input")
        return self.make_word(layers)

    @staticmethod
    def _position(text: str, offset: int) -> Tuple[int, int]:
        line = text.count("\n", 0, offset) + 1
        col = offset - (text.rfind("\n", 0, offset) + 1) + 1
        return line, col

    def serialize_word(self, word: CobordismWord) -> str:
        layers = (f" {GENERATOR_SEPARATOR} ".join(g.value for g in layer) for layer in word.layers)
        return f" {LAYER_SEPARATOR} ".join(layers)

    def compose(self, first: CobordismWord, second: CobordismWord) -> CobordismWord:
        """``first`` followed by ``second``"""
        if first.out_width != second.in_width:
            raise WidthMismatchException(len(first.layers) + 1, first.out_width, second.in_width)
        return self.make_word(first.layers + second.layers)

    def juxtapose(self, left: CobordismWord, right: CobordismWord) -> CobordismWord:
        """Disjoint union, ``left``'s strands first; the shorter word is padded with identity layers"""
        depth = max(len(left.layers), len(right.layers))
        layers = []
        for k in range(depth):
            a = left.layers[k] if k < len(left.layers) else _ids(left.out_width)
            b = right.layers[k] if k < len(right.layers) else _ids(right.out_width)
            layers.append(a + b)
        return self.make_word(layers)

    def identity_word(self, n: int) -> CobordismWord:
        """n parallel cylinders (n >= 1)"""
        return self.make_word([_ids(n)])

    def connected_word(self, genus: int, inputs: int, outputs: int) -> CobordismWord:
        """The connected surface of the given genus with ``inputs`` in-circles and ``outputs`` out-circles"""
        layers: List[Layer] = []
        if inputs == 0:
            layers.append((CUP,))
        for k in range(inputs, 1, -1):
            layers.append((MUL,) + _ids(k - 2))
        for _ in range(genus):
            layers.extend([(COMUL,), (MUL,)])
        for k in range(1, outputs):
            layers.append((COMUL,) + _ids(k - 1))
        if outputs == 0:
            layers.append((CAP,))
        return self.make_word(layers or [(ID,)])

    def closed_surface_word(self, genus: int) -> CobordismWord:
        return self.connected_word(genus, 0, 0)

    # ===== TOPOLOGY =====

    def euler_char(self, word: CobordismWord) -> int:
        return sum(g.euler for layer in word.layers for g in layer)

    def normal_form(self, word: CobordismWord) -> NormalForm:
        """
        Connected components with genus and boundary, by union-find over strands.

        Genus of a component is (2 - b - chi) / 2 with b its boundary circle count.
        """
        parent: List[int] = []
        chi: List[int] = []

        def new_node() -> int:
            parent.append(len(parent))
            chi.append(0)
            return len(parent) - 1

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        inputs = [new_node() for _ in range(word.in_width)]
        strands = list(inputs)
        for layer in word.layers:
            produced: List[int] = []
            pos = 0
            for g in layer:
                consumed = strands[pos : pos + g.inputs]
                pos += g.inputs
                if g is ID:
                    produced.extend(consumed)
                elif g is SWAP:
                    produced.extend([consumed[1], consumed[0]])
                elif g is CUP:
                    node = new_node()
                    chi[node] += 1
                    produced.append(node)
                elif g is CAP:
                    chi[consumed[0]] += 1
                elif g is MUL:
                    a, b = find(consumed[0]), find(consumed[1])
                    if a != b:
                        parent[b] = a
                    chi[a] -= 1
                    produced.append(a)
                else:
                    chi[consumed[0]] -= 1
                    produced.extend([consumed[0], consumed[0]])
            strands = produced

        totals: Dict[int, int] = {}
        for node in range(len(parent)):
            root = find(node)
            totals[root] = totals.get(root, 0) + chi[node]
        ins: Dict[int, List[int]] = {root: [] for root in totals}
        outs: Dict[int, List[int]] = {root: [] for root in totals}
        for i, node in enumerate(inputs):
            ins[find(node)].append(i)
        for j, node in enumerate(strands):
            outs[find(node)].append(j)

        open_components = []
        closed_components = []
        for root, euler in totals.items():
            boundary = len(ins[root]) + len(outs[root])
            genus = (2 - boundary - euler) // 2
            if boundary:
                open_components.append(OpenComponent(genus, tuple(ins[root]), tuple(outs[root])))
            else:
                closed_components.append(ClosedComponent(genus))
        open_components.sort(key=lambda c: (c.inputs, c.outputs))
        closed_components.sort(key=lambda c: c.genus)
        return NormalForm(tuple(open_components), tuple(closed_components), word.in_width, word.out_width)

    # ===== CERF MOVES =====

    def _match_two(
        self, word: CobordismWord, layer: int, offset: int, top: Layer, bottom: Layer
    ) -> Optional[Tuple[Layer, Layer, Layer, Layer]]:
        if layer + 1 >= len(word.layers):
            return None
        upper = word.layers[layer]
        if upper[offset : offset + len(top)] != top:
            return None
        lower = word.layers[layer + 1]
        strand = layer_outputs(upper[:offset])
        for q in range(len(lower)):
            if layer_inputs(lower[:q]) == strand and lower[q : q + len(bottom)] == bottom:
                return upper[:offset], upper[offset + len(top) :], lower[:q], lower[q + len(bottom) :]
        return None

    def _splice(
        self,
        word: CobordismWord,
        start: int,
        stop: int,
        left: Layer,
        right: Layer,
        through: int,
        replacement: Tuple[Layer, ...],
        after: Optional[Tuple[Layer, Layer, int]],
    ) -> CobordismWord:
        """Replace layers [start, stop) by spectators, the padded replacement, and trailing spectators"""
        layers: List[Layer] = list(word.layers[:start])
        head = left + _ids(through) + right
        if _has_non_id(head):
            layers.append(head)
        pad_left, pad_right = layer_outputs(left), layer_outputs(right)
        layers.extend(_ids(pad_left) + r + _ids(pad_right) for r in replacement)
        if after is not None:
            left_r, right_r, passing = after
            tail = left_r + _ids(passing) + right_r
            if _has_non_id(tail):
                layers.append(tail)
        layers.extend(word.layers[stop:])
        return self.make_word(layers)

    def apply_cerf_move(self, word: CobordismWord, move: CerfMove) -> CobordismWord:
        """
        Rewrite the word locally.

        Raises:
            PatternMismatchException: the move's pattern is not at the given position
        """
        kind, layer, offset = move.kind, move.layer, move.offset
        mismatch = PatternMismatchException(kind.value, layer, offset)

        if kind is MoveKind.ID_INSERT:
            widths = word.boundary_widths()
            if not 0 <= layer < len(widths) or widths[layer] == 0:
                raise mismatch
            layers = list(word.layers)
            layers.insert(layer, _ids(widths[layer]))
            return self.make_word(layers)

        if kind is MoveKind.ID_REMOVE:
            if len(word.layers) < 2 or not 0 <= layer < len(word.layers) or _has_non_id(word.layers[layer]):
                raise mismatch
            return self.make_word(word.layers[:layer] + word.layers[layer + 1 :])

        if not 0 <= layer < len(word.layers):
            raise mismatch

        if kind in _ONE_LAYER_MOVES:
            pattern, replacement = _ONE_LAYER_MOVES[kind]
            current = word.layers[layer]
            if current[offset : offset + len(pattern)] != pattern:
                raise mismatch
            left, right = current[:offset], current[offset + len(pattern) :]
            return self._splice(word, layer, layer + 1, left, right, layer_inputs(pattern), replacement, None)

        top, bottom, replacement = _TWO_LAYER_MOVES[kind]
        match = self._match_two(word, layer, offset, top, bottom)
        if match is None:
            raise mismatch
        left_l, right_l, left_r, right_r = match
        return self._splice(
            word,
            layer,
            layer + 2,
            left_l,
            right_l,
            layer_inputs(top),
            replacement,
            (left_r, right_r, layer_outputs(bottom)),
        )

    def find_applicable_moves(self, word: CobordismWord) -> List[CerfMove]:
        """Every (kind, layer, offset) at which a move applies"""
        moves: List[CerfMove] = []
        for layer, width in enumerate(word.boundary_widths()):
            if width:
                moves.append(CerfMove(MoveKind.ID_INSERT, layer, 0))
        if len(word.layers) > 1:
            for layer, gens in enumerate(word.layers):
                if not _has_non_id(gens):
                    moves.append(CerfMove(MoveKind.ID_REMOVE, layer, 0))
        for layer, gens in enumerate(word.layers):
            for offset in range(len(gens)):
                for kind, (pattern, _) in _ONE_LAYER_MOVES.items():
                    if gens[offset : offset + len(pattern)] == pattern:
                        moves.append(CerfMove(kind, layer, offset))
                for kind, (top, bottom, _) in _TWO_LAYER_MOVES.items():
                    if self._match_two(word, layer, offset, top, bottom) is not None:
                        moves.append(CerfMove(kind, layer, offset))
        return moves

    # ===== RANDOM WORDS =====

    def random_word(self, seed: int, max_width: int, max_layers: int) -> CobordismWord:
        """
        A random valid word; a deterministic function of the arguments.

        Widths never exceed ``max_width`` and each layer holds at most one cup.
        """
        rng = random.Random(seed)
        width = rng.randint(0, max_width)
        layers: List[Layer] = []
        for _ in range(rng.randint(1, max(1, max_layers))):
            if width == 0:
                layer: Layer = (CUP,)
            else:
                layer = self._random_layer(rng, width, max_width)
            layers.append(layer)
            width = layer_outputs(layer)
        return self.make_word(layers)

    @staticmethod
    def _random_layer(rng: random.Random, width: int, max_width: int) -> Layer:
        gens: List[Generator] = []
        produced = 0
        used = 0
        cup_used = False
        while used < width:
            remaining = width - used
            options = [ID, ID, CAP]
            if remaining >= 2:
                options.extend([SWAP, MUL])
            if produced + remaining + 1 <= max_width:
                options.append(COMUL)
                if not cup_used:
                    options.append(CUP)
            g = rng.choice(options)
            if g is CUP:
                cup_used = True
            gens.append(g)
            used += g.inputs
            produced += g.outputs
        return tuple(gens)


cobordism_service = CobordismService()
