"""
Message catalogs for error lines and report text.

Catalogs live in ``locales/<lang>/LC_MESSAGES/messages.json`` as nested
sections; messages are addressed by dotted keys such as
``word.width_mismatch`` and formatted with ``str.format`` parameters.
A key missing from the selected catalog is looked up in the English one.
"""

import json
from contextvars import ContextVar
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

from app.config.settings import settings
from app.utils.tracing import get_trace_logger

logger = get_trace_logger("i18n")

SUPPORTED_LANGUAGES = ("en",)
DEFAULT_LANGUAGE = "en"
LOCALES_PATH = Path(__file__).resolve().parent.parent.parent / "locales"

_current_language: ContextVar[str] = ContextVar("current_language", default=settings.LANGUAGE)


@lru_cache(maxsize=None)
def load_translations(language: str) -> Dict[str, Any]:
    """The whole catalog of one language; empty if it cannot be read"""
    if language not in SUPPORTED_LANGUAGES:
        logger.warning(f"Unsupported language: {language}, falling back to {DEFAULT_LANGUAGE}")
        language = DEFAULT_LANGUAGE

    messages_file = LOCALES_PATH / language / "LC_MESSAGES" / "messages.json"
    try:
        catalog: Dict[str, Any] = json.loads(messages_file.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        logger.error(f"Cannot load catalog {messages_file}: {e}")
        return {}
    logger.debug(f"Loaded {len(catalog)} message sections for {language}")
    return catalog


def _lookup(catalog: Dict[str, Any], key: str) -> Optional[str]:
    node: Any = catalog
    for part in key.split("."):
        if not isinstance(node, dict) or part not in node:
            return None
        node = node[part]
    return node if isinstance(node, str) else None


def get_message(key: str, language: str = DEFAULT_LANGUAGE, **params: Any) -> str:
    """
    Resolve a dotted key and interpolate ``params``.

    Falls back to the English catalog, then to the key itself.

    Examples:
        >>> get_message("frobenius.zero_lambda", "en")
        'lambda must be nonzero'
    """
    template = _lookup(load_translations(language), key)
    if template is None and language != DEFAULT_LANGUAGE:
        template = _lookup(load_translations(DEFAULT_LANGUAGE), key)
    if template is None:
        logger.warning(f"Message key not found: {key} ({language})")
        return key
    try:
        return template.format(**params)
    except (KeyError, IndexError, ValueError) as e:
        logger.warning(f"Cannot format message '{key}': {e}")
        return template


def set_current_language(language: str) -> None:
    _current_language.set(language if language in SUPPORTED_LANGUAGES else DEFAULT_LANGUAGE)


def get_current_language() -> str:
    return _current_language.get()


def __(key: str, **params: Any) -> str:
    """
    Message in the current language.

    Examples:
        >>> __("word.width_mismatch", layer=2, expected=1, got=2)
        'width mismatch at layer 2: expected 1 input circles, got 2'
    """
    return get_message(key, get_current_language(), **params)


def report_message(key: str, **params: Any) -> str:
    """A line from the ``report`` section"""
    return __(f"report.{key}", **params)
