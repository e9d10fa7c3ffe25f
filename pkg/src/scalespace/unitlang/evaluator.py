"""Evaluation of unit-language programs against a scale registry."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..errors import (
    DimensionMismatch,
    FractionalPowerOfNegative,
    ScaleSpaceError,
    SingularBasis,
    ZeroToNonpositivePower,
)
from ..exactla import format_rational
from ..scales import (
    DIMENSIONLESS,
    DimVector,
    Registry,
    Scale,
    SignedScale,
    express_in_basis,
    pi_groups,
    ratio,
    scale_div,
    scale_mul,
    scale_pow,
)
from .nodes import (
    Base,
    Check,
    Dim,
    Div,
    Express,
    Group,
    Ident,
    Literal,
    Mul,
    PiGroups,
    Pow,
    Ratio,
    ScaleDef,
)
from .printer import expr_to_source, statement_to_source


class Severity(str, Enum):
    ERROR = "error"
    FAILURE = "failure"
    INFO = "info"


@dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    line: int
    column: int
    code: str
    message: str

    def to_json(self) -> dict:
        return {
            "severity": self.severity.value,
            "line": self.line,
            "column": self.column,
            "code": self.code,
            "message": self.message,
        }


@dataclass
class Result:
    stmt: str
    kind: str
    ok: bool
    payload: dict
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)

    def to_json(self) -> dict:
        return {"stmt": self.stmt, "kind": self.kind, "ok": self.ok, "payload": self.payload}


class EvalError(Exception):
    """Internal: a statement could not be evaluated."""

    def __init__(self, code: str, message: str, pos):
        super().__init__(message)
        self.code = code
        self.message = message
        self.pos = pos


def number(x: float) -> float:
    """Coefficients go out with 15 significant digits: stable across libms."""
    return float(f"{x:.15g}")


_KIND = {Dim: "dim", Check: "check", Express: "express", PiGroups: "pigroups", Ratio: "ratio"}


class Evaluator:
    """Runs statements in order, collecting results and diagnostics.

    Errors (bad names, impossible powers, malformed definitions) stop only the
    statement they occur in.  Dimensional failures are ordinary results with a
    ``failure`` diagnostic attached.
    """

    def __init__(self, registry: Registry | None = None):
        self.registry = registry.copy() if registry is not None else Registry()
        self.results: list[Result] = []
        self.diagnostics: list[Diagnostic] = []

    # -- helpers

    def diag(self, severity: Severity, pos, code: str, message: str):
        self.diagnostics.append(Diagnostic(severity, pos[0], pos[1], code, message))

    def base_unit(self, name: str) -> Scale | None:
        names = self.registry.base_names
        if name not in names:
            return None
        exps = [1 if n == name else 0 for n in names]
        return Scale(DimVector.of(exps), 1.0)

    def lookup(self, name: str, pos):
        k = self.base_unit(name)
        if k is None:
            k = self.registry.get(name)
        if k is None:
            raise EvalError("UndefinedIdentifier", f"undefined identifier '{name}'", pos)
        return k

    def render(self, dims: DimVector) -> str:
        return self.registry.render(dims)

    def value(self, node):
        if isinstance(node, Ident):
            return self.lookup(node.name, node.pos)
        if isinstance(node, Literal):
            return Scale(DIMENSIONLESS, node.value)
        if isinstance(node, Group):
            return self.value(node.inner)
        if isinstance(node, (Mul, Div)):
            left, right = self.value(node.left), self.value(node.right)
            try:
                return scale_mul(left, right) if isinstance(node, Mul) else scale_div(left, right)
            except ZeroToNonpositivePower as exc:
                raise EvalError("ZeroToNonpositivePower", str(exc), node.pos) from None
        if isinstance(node, Pow):
            base = self.value(node.base)
            try:
                return scale_pow(base, node.exponent)
            except FractionalPowerOfNegative as exc:
                raise EvalError("FractionalPowerOfNegative", str(exc), node.pos) from None
            except ZeroToNonpositivePower as exc:
                raise EvalError("ZeroToNonpositivePower", str(exc), node.pos) from None
        raise TypeError(f"not an expression node: {node!r}")

    # -- statements

    def run(self, statements) -> Evaluator:
        for stmt in statements:
            try:
                self.statement(stmt)
            except EvalError as exc:
                self.diag(Severity.ERROR, exc.pos, exc.code, exc.message)
        return self

    def statement(self, stmt):
        handler = getattr(self, "do_" + type(stmt).__name__.lower())
        handler(stmt)

    def _defined(self, name: str) -> bool:
        return name in self.registry.base_names or name in self.registry

    def do_base(self, stmt: Base):
        if self._defined(stmt.name):
            raise EvalError("DuplicateDefinition", f"'{stmt.name}' is already defined", stmt.pos)
        if self.registry.entries or len(self.registry.base_names) >= 3:
            raise EvalError(
                "TooManyBases",
                "exactly three base statements are allowed, before any scale definition",
                stmt.pos,
            )
        self.registry.base_names = tuple(self.registry.base_names) + (stmt.name,)

    def do_scaledef(self, stmt: ScaleDef):
        if len(self.registry.base_names) != 3:
            raise EvalError(
                "MissingBases",
                f"scale definitions need exactly three base spaces, "
                f"found {len(self.registry.base_names)}",
                stmt.pos,
            )
        if self._defined(stmt.name):
            raise EvalError("DuplicateDefinition", f"'{stmt.name}' is already defined", stmt.pos)
        k = self.value(stmt.expr)
        coeff = k.coeff * (1.0 if stmt.coeff is None else stmt.coeff)
        if stmt.signed:
            k = SignedScale(k.dims, coeff)
        elif coeff > 0:
            k = Scale(k.dims, coeff)
        else:
            raise EvalError(
                "NonPositiveCoefficient",
                f"scale '{stmt.name}' needs a positive coefficient; declare it 'signed'",
                stmt.pos,
            )
        self.registry.define(stmt.name, k)

    def _result(self, stmt, ok: bool, payload: dict) -> Result:
        res = Result(statement_to_source(stmt), _KIND[type(stmt)], ok, payload, *stmt.pos)
        self.results.append(res)
        return res

    def do_dim(self, stmt: Dim):
        k = self.value(stmt.expr)
        self._result(stmt, True, {
            "dims": self.render(k.dims),
            "exponents": [format_rational(e) for e in k.dims],
        })

    def do_check(self, stmt: Check):
        lhs, rhs = self.value(stmt.lhs), self.value(stmt.rhs)
        ok = lhs.dims == rhs.dims
        self._result(stmt, ok, {"lhs": self.render(lhs.dims), "rhs": self.render(rhs.dims)})
        if not ok:
            self.diag(
                Severity.FAILURE, stmt.pos, "CheckFailed",
                f"{expr_to_source(stmt.lhs)} has dimension {self.render(lhs.dims)} "
                f"but {expr_to_source(stmt.rhs)} has {self.render(rhs.dims)}",
            )

    def do_express(self, stmt: Express):
        k = self.value(stmt.expr)
        where = stmt.basis_pos or (stmt.pos,) * 3
        basis = [self.lookup(n, p) for n, p in zip(stmt.basis, where)]
        try:
            c1, c2, c3, r = express_in_basis(k, basis)
        except SingularBasis:
            self._result(stmt, False, {"basis": list(stmt.basis), "error": "SingularBasis"})
            self.diag(Severity.FAILURE, stmt.pos, "SingularBasis",
                      f"({', '.join(stmt.basis)}) is not a scale basis: determinant is 0")
            return
        except FractionalPowerOfNegative as exc:
            raise EvalError("FractionalPowerOfNegative", str(exc), stmt.pos) from None
        except ZeroToNonpositivePower as exc:
            raise EvalError("ZeroToNonpositivePower", str(exc), stmt.pos) from None
        self._result(stmt, True, {
            "basis": list(stmt.basis),
            "exponents": [format_rational(c) for c in (c1, c2, c3)],
            "coefficient": number(r),
        })

    def do_pigroups(self, stmt: PiGroups):
        where = stmt.names_pos or (stmt.pos,) * len(stmt.names)
        qs = [self.lookup(n, p) for n, p in zip(stmt.names, where)]
        groups = pi_groups(qs)
        self._result(stmt, True, {
            "names": list(stmt.names),
            "groups": [[format_rational(x) for x in g] for g in groups],
        })

    def do_ratio(self, stmt: Ratio):
        lhs, rhs = self.value(stmt.lhs), self.value(stmt.rhs)
        try:
            r = ratio(lhs, rhs)
        except DimensionMismatch:
            self._result(stmt, False, {
                "lhs": self.render(lhs.dims), "rhs": self.render(rhs.dims),
                "error": "DimensionMismatch",
            })
            self.diag(Severity.FAILURE, stmt.pos, "DimensionMismatch",
                      f"cannot compare {self.render(lhs.dims)} with {self.render(rhs.dims)}")
            return
        except ScaleSpaceError as exc:
            raise EvalError(type(exc).__name__, str(exc), stmt.pos) from None
        self._result(stmt, True, {"value": number(r)})

    # -- outcome

    @property
    def has_errors(self) -> bool:
        return any(d.severity is Severity.ERROR for d in self.diagnostics)

    @property
    def has_failures(self) -> bool:
        return any(d.severity is Severity.FAILURE for d in self.diagnostics)

    def exit_code(self) -> int:
        if self.has_errors:
            return 2
        return 1 if self.has_failures else 0


def evaluate(statements, registry: Registry | None = None) -> Evaluator:
    return Evaluator(registry).run(statements)


def render_group(names, exponents) -> str:
    """``c hbar G^-1 m^-2`` for a power product."""
    parts = []
    for name, x in zip(names, exponents):
        if x == 0:
            continue
        parts.append(name if x == 1 else f"{name}^{format_rational(x)}")
    return " ".join(parts) if parts else "1"
