"""Loading definitions files (base and scale statements only)."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from ..scales import Registry
from .evaluator import Diagnostic, Evaluator, Severity
from .lexer import LexError
from .nodes import DEFINITIONS
from .parser import ParseError, parse

BUNDLED = "si.units"


class DefinitionsError(Exception):
    """A definitions file that does not load cleanly."""

    def __init__(self, source: str, diagnostics: list[Diagnostic]):
        first = diagnostics[0]
        super().__init__(f"{source}:{first.line}:{first.column}: {first.code}: {first.message}")
        self.source = source
        self.diagnostics = diagnostics


def bundled_text() -> str:
    return resources.files("scalespace").joinpath("defs", BUNDLED).read_text(encoding="utf-8")


def registry_from_text(text: str, source: str = "<defs>") -> Registry:
    try:
        statements = parse(text)
    except (LexError, ParseError) as exc:
        raise DefinitionsError(
            source, [Diagnostic(Severity.ERROR, exc.line, exc.column, exc.code, exc.message)]
        ) from None
    bad = [s for s in statements if not isinstance(s, DEFINITIONS)]
    if bad:
        diags = [
            Diagnostic(Severity.ERROR, *s.pos, "NotADefinition",
                       "definitions files may only contain base and scale statements")
            for s in bad
        ]
        raise DefinitionsError(source, diags)
    ev = Evaluator().run(statements)
    if ev.has_errors:
        raise DefinitionsError(source, ev.diagnostics)
    if len(ev.registry.base_names) != 3:
        raise DefinitionsError(source, [Diagnostic(
            Severity.ERROR, 1, 1, "MissingBases",
            f"expected three base statements, found {len(ev.registry.base_names)}",
        )])
    return ev.registry


def load_definitions(path=None) -> Registry:
    """Registry from ``path``, or from the bundled SI definitions when omitted."""
    if path is None:
        return registry_from_text(bundled_text(), BUNDLED)
    path = Path(path)
    return registry_from_text(path.read_text(encoding="utf-8"), str(path))
