"""
Tests for cobordism words: parsing, normal forms, Euler characteristic and Cerf moves.
"""
import pytest

from app.exceptions import PatternMismatchException, WidthMismatchException, WordSyntaxException
from app.models.cobordism import CerfMove, ClosedComponent, Generator, MoveKind, OpenComponent
from app.services.cobordism_service import cobordism_service


def _parse(text):
    return cobordism_service.parse_word(text)


@pytest.mark.unit
class TestParseWord:
    """Test cases for the word language"""

    def test_layers_and_widths(self):
        word = _parse("cup , id ; mul ; comul")
        assert word.layers == (
            (Generator.CUP, Generator.ID),
            (Generator.MUL,),
            (Generator.COMUL,),
        )
        assert (word.in_width, word.out_width) == (1, 2)
        assert word.boundary_widths() == (1, 2, 1, 2)

    def test_whitespace_is_free(self):
        assert _parse("  mul;\n comul  ") == _parse("mul ; comul")

    def test_serialize(self):
        word = _parse("id,cup;mul")
        assert cobordism_service.serialize_word(word) == "id , cup ; mul"
        assert _parse(cobordism_service.serialize_word(word)) == word

    @pytest.mark.parametrize(
        "text,line,col",
        [
            ("", 1, 1),
            ("mul ;; cap", 1, 6),
            ("mul , foo", 1, 7),
            ("cup ;\n  cap cap", 2, 7),
            ("mul ;", 1, 6),
            ("id # id", 1, 4),
        ],
    )
    def test_syntax_errors_carry_position(self, text, line, col):
        with pytest.raises(WordSyntaxException) as exc:
            _parse(text)
        assert (exc.value.line, exc.value.col) == (line, col)
        assert exc.value.exit_code == 2

    def test_width_mismatch(self):
        with pytest.raises(WidthMismatchException) as exc:
            _parse("mul ; mul")
        assert exc.value.details == {"layer": 2, "expected": 1, "got": 2}

    def test_compose_width_mismatch(self):
        with pytest.raises(WidthMismatchException):
            cobordism_service.compose(_parse("comul"), _parse("id"))

    def test_compose_and_juxtapose(self):
        composed = cobordism_service.compose(_parse("comul"), _parse("mul"))
        assert composed == _parse("comul ; mul")
        placed = cobordism_service.juxtapose(_parse("mul ; comul"), _parse("cap"))
        assert placed == _parse("mul , cap ; comul")


@pytest.mark.unit
class TestNormalForm:
    """Test cases for normal_form and euler_char"""

    def test_pair_of_pants(self):
        nf = cobordism_service.normal_form(_parse("mul"))
        assert nf.open_components == (OpenComponent(0, (0, 1), (0,)),)
        assert nf.closed_components == ()
        assert cobordism_service.euler_char(_parse("mul")) == -1

    def test_handle(self):
        nf = cobordism_service.normal_form(_parse("comul ; mul"))
        assert nf.open_components == (OpenComponent(1, (0,), (0,)),)

    def test_closed_surfaces(self):
        for genus in range(4):
            word = cobordism_service.closed_surface_word(genus)
            nf = cobordism_service.normal_form(word)
            assert nf.closed_components == (ClosedComponent(genus),)
            assert cobordism_service.euler_char(word) == 2 - 2 * genus

    def test_identity_word(self):
        word = cobordism_service.identity_word(3)
        assert cobordism_service.serialize_word(word) == "id , id , id"
        nf = cobordism_service.normal_form(word)
        assert nf.open_components == tuple(OpenComponent(0, (i,), (i,)) for i in range(3))

    def test_swap_keeps_two_cylinders(self):
        nf = cobordism_service.normal_form(_parse("swap"))
        assert nf.open_components == (OpenComponent(0, (0,), (1,)), OpenComponent(0, (1,), (0,)))

    def test_mixed_components(self):
        nf = cobordism_service.normal_form(_parse("id , cup ; id , cap ; id , cup ; id , comul ; id , mul ; id , cap"))
        assert nf.open_components == (OpenComponent(0, (0,), (0,)),)
        assert nf.closed_components == (ClosedComponent(0), ClosedComponent(1))
        assert nf.component_count == 3

    @pytest.mark.parametrize("genus,inputs,outputs", [(0, 1, 1), (1, 2, 1), (2, 0, 3), (0, 3, 0), (3, 2, 2)])
    def test_connected_word(self, genus, inputs, outputs):
        word = cobordism_service.connected_word(genus, inputs, outputs)
        nf = cobordism_service.normal_form(word)
        assert nf.open_components == (OpenComponent(genus, tuple(range(inputs)), tuple(range(outputs))),)
        assert nf.euler == cobordism_service.euler_char(word) == 2 - 2 * genus - inputs - outputs


@pytest.mark.unit
class TestCerfMoves:
    """Test cases for apply_cerf_move and find_applicable_moves"""

    def test_unit_cancellation(self):
        moved = cobordism_service.apply_cerf_move(_parse("cup , id ; mul"), CerfMove(MoveKind.UNIT_LEFT, 0, 0))
        assert moved == _parse("id")

    def test_frobenius_relation(self):
        moved = cobordism_service.apply_cerf_move(_parse("comul , id ; id , mul"), CerfMove(MoveKind.FROB_LEFT, 0, 0))
        assert moved == _parse("mul ; comul")

    def test_id_insert_and_remove(self):
        word = _parse("mul")
        inserted = cobordism_service.apply_cerf_move(word, CerfMove(MoveKind.ID_INSERT, 1))
        assert inserted == _parse("mul ; id")
        assert cobordism_service.apply_cerf_move(inserted, CerfMove(MoveKind.ID_REMOVE, 1)) == word

    def test_pattern_mismatch(self):
        with pytest.raises(PatternMismatchException) as exc:
            cobordism_service.apply_cerf_move(_parse("mul"), CerfMove(MoveKind.UNIT_LEFT, 0, 0))
        assert exc.value.details == {"move": "unit_left", "layer": 0, "offset": 0}

    def test_applicable_moves_on_cylinder(self):
        moves = cobordism_service.find_applicable_moves(_parse("id"))
        kinds = sorted(m.kind.value for m in moves)
        assert kinds == sorted(
            ["id_insert", "id_insert", "unit_left_intro", "unit_right_intro", "counit_left_intro", "counit_right_intro"]
        )

    @pytest.mark.parametrize("seed", range(20))
    def test_moves_preserve_normal_form(self, seed):
        word = cobordism_service.random_word(seed, 4, 5)
        normal = cobordism_service.normal_form(word)
        for move in cobordism_service.find_applicable_moves(word):
            moved = cobordism_service.apply_cerf_move(word, move)
            assert cobordism_service.normal_form(moved) == normal, str(move)
            assert cobordism_service.euler_char(moved) == cobordism_service.euler_char(word)


@pytest.mark.unit
class TestRandomWord:
    """Test cases for random_word"""

    def test_deterministic(self):
        assert cobordism_service.random_word(11, 4, 6) == cobordism_service.random_word(11, 4, 6)

    def test_respects_bounds(self):
        for seed in range(50):
            word = cobordism_service.random_word(seed, 3, 5)
            assert len(word.layers) <= 5
            assert max(word.boundary_widths()) <= 3
            assert max(word.state_widths()) <= 3

    def test_every_generator_occurs(self):
        seen = set()
        for seed in range(1000):
            for layer in cobordism_service.random_word(seed, 4, 6).layers:
                seen.update(layer)
        assert seen == set(Generator)


@pytest.mark.unit
class TestEulerChar:
    """Test cases for euler_char"""

    def test_state_widths_inside_a_layer(self):
        assert _parse("comul , mul").state_widths() == (3, 4, 3)
        assert _parse("cup ; comul").state_widths() == (0, 1, 2)

    @pytest.mark.parametrize("seed", range(40))
    def test_sum_over_normal_form_components(self, seed):
        word = cobordism_service.random_word(seed, 4, 6)
        assert cobordism_service.euler_char(word) == cobordism_service.normal_form(word).euler

    @pytest.mark.parametrize("seed", range(20))
    def test_additive_under_composition(self, seed):
        first = cobordism_service.random_word(seed, 3, 5)
        second = cobordism_service.connected_word(seed % 3, first.out_width, 1 + seed % 2)
        composed = cobordism_service.compose(first, second)
        chi = cobordism_service.euler_char(first) + cobordism_service.euler_char(second)
        assert cobordism_service.euler_char(composed) == chi
        assert cobordism_service.normal_form(composed).euler == chi
