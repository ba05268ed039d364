"""
Unit tests for the message catalog.
"""
import pytest

from app.utils.i18n import __, get_current_language, get_message, load_translations, set_current_language


@pytest.mark.unit
class TestI18n:
    """Test cases for message lookup"""

    def test_interpolation(self):
        message = __("word.width_mismatch", layer=2, expected=1, got=2)
        assert message == "width mismatch at layer 2: expected 1 input circles, got 2"

    def test_missing_key_returns_key(self):
        assert get_message("no.such.key", "en") == "no.such.key"

    def test_unsupported_language_falls_back(self):
        set_current_language("xx")
        assert get_current_language() == "en"

    def test_every_exception_family_has_messages(self):
        catalog = load_translations("en")
        for section in ("scalar", "field", "spec", "algebra", "frobenius", "decompose", "word", "tqft", "report"):
            assert catalog[section]

    def test_unknown_language_reads_english(self):
        assert get_message("frobenius.zero_lambda", "fr") == "lambda must be nonzero"

    def test_missing_parameter_keeps_template(self):
        assert get_message("word.width_mismatch", "en", layer=2).startswith("width mismatch at layer {layer}")
