"""Execute parsed sessions: build towers and descriptors, answer queries, produce records."""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import engine as en
from .. import factoracle as fo
from ..exactscalar import GF, QQ
from ..polyrat.parse import ExprSyntaxError, parse_ratfunc
from ..towers import (
    FieldTower, InfiniteDegree, adjoin_insep, adjoin_root, adjoin_sqrt, adjoin_transcendental,
    ambient_root, classify, format_element, minpoly_of_element, parse_unipoly, prime_root,
)
from .dsl import AlgebraDef, BaseDef, DslError, FieldDef, Query, SemanticError, Session

SCHEMA_VERSION = 1

# Exceptions the library raises for mathematically or computationally rejected input.
_REJECTIONS = (ValueError, ArithmeticError, KeyError, AssertionError,
               fo.OracleUnavailable, fo.UncertifiableIrreducibility)


@dataclass
class Report:
    bindings: list = field(default_factory=list)  # dicts describing each definition
    records: list = field(default_factory=list)  # one dict per query
    errors: list = field(default_factory=list)  # DslError instances

    @property
    def exit_code(self) -> int:
        return 2 if self.errors else 0

    def to_json(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "bindings": self.bindings, "records": self.records}


def _semantic(exc: Exception, line: int, column: int = 1) -> SemanticError:
    msg = str(exc) or type(exc).__name__
    if isinstance(exc, ExprSyntaxError):
        return SemanticError(f"bad expression: {msg}", line, column, "ExprSyntaxError")
    return SemanticError(msg, line, column, type(exc).__name__)


class Environment:
    def __init__(self):
        self.fields: dict[str, FieldTower] = {}
        self.algebras: dict[str, en.AlgebraDescriptor] = {}

    # -- definitions --------------------------------------------------------
    def define_base(self, d: BaseDef) -> dict:
        if d.p == 0:
            T = FieldTower(prime_root(QQ, d.name), (), d.name)
        elif d.ambient_vars is None:
            T = FieldTower(prime_root(GF(d.p), d.name), (), d.name)
        else:
            gens = [parse_ratfunc(g, GF(d.p), d.ambient_vars) for g in d.generators]
            T = FieldTower(ambient_root(d.p, d.ambient_vars, gens, d.name), (), d.name)
        self.fields[d.name] = T
        return {"name": d.name, "kind": "base", "field": T.root.describe()}

    def define_field(self, d: FieldDef) -> dict:
        T = self.fields[d.over]
        notes = []
        for c in d.clauses:
            try:
                T = self._apply(T, c, notes)
            except _REJECTIONS as exc:
                raise _semantic(exc, d.line, c.column) from exc
        T = T.renamed(d.name)
        self.fields[d.name] = T
        out = {"name": d.name, "kind": "field", "tower": T.describe()}
        deg = T.degree(self.fields[T.root.name]) if T.root.name in self.fields else None
        out["degree_over_base"] = str(deg) if deg is not None else None
        out["transcendence_degree"] = T.td()
        if notes:
            out["notes"] = notes
        return out

    @staticmethod
    def _apply(T: FieldTower, c, notes: list) -> FieldTower:
        if c.kind == "transcendental":
            for n, _ in c.items:
                T = adjoin_transcendental(T, n)
        elif c.kind == "insep":
            for text, alias in c.items:
                g = T.parse(text)
                T = adjoin_insep(T, g, alias or str(g))
        elif c.kind == "root":
            poly, name = c.items[0]
            T = adjoin_root(T, name, parse_unipoly(T, poly, "X"))
        elif c.kind == "sqrt":
            for text, alias in c.items:
                dval = int(text)
                name = alias or (f"sqrt{dval}" if dval >= 0 else f"sqrt_m{-dval}")
                T, added = adjoin_sqrt(T, dval, name)
                if not added:
                    notes.append(f"sqrt({dval}) already lies in the field; step skipped")
        return T

    def define_algebra(self, d: AlgebraDef) -> dict:
        desc = en.AlgebraDescriptor(
            d.name,
            regular=d.flag("regular"),
            residually_separable=d.flag("residually_separable"),
            finitely_generated=d.flag("finitely_generated"),
            geometrically_regular=d.flag("geometrically_regular"),
            residue_fields=[self.fields[n] for n in d.residue_fields],
            noetherian=d.flag("noetherian"),
        )
        self.algebras[d.name] = desc
        return {"name": d.name, "kind": "algebra", "descriptor": d.to_text().split(" = ", 1)[1]}

    def descriptor(self, name: str) -> en.AlgebraDescriptor:
        if name in self.algebras:
            return self.algebras[name]
        return en.AlgebraDescriptor.of_field(self.fields[name])

    # -- queries ------------------------------------------------------------
    def answer(self, q: Query) -> dict:
        F = self.fields
        a = q.args
        if q.kind == "regular":
            v = en.check_regular(F[a[0]], F[a[1]], strict=q.option("strict") == "true")
        elif q.kind == "dim":
            v = en.tensor_dimension(F[a[0]], F[a[1]])
        elif q.kind == "decompose":
            v = en.decompose(F[a[0]], F[a[1]])
        elif q.kind == "crossvalidate":
            v = en.cross_validate(F[a[0]], F[a[1]])
        elif q.kind == "intersect":
            v = en.intersect_fields(F[a[0]], F[a[1]])
        elif q.kind == "self_tensor":
            v = en.check_self_tensor(F[a[0]])
        elif q.kind == "theorem3":
            v = en.check_theorem3(self.descriptor(a[0]), self.descriptor(a[1]),
                                  assume=q.option("assume", ()), assume_noetherian=q.option("noetherian") == "true")
        else:
            return self._tower_query(q)
        return v.to_json()

    def _tower_query(self, q: Query) -> dict:
        F = self.fields
        over = F[q.option("over")] if q.option("over") else None
        details = {}
        if q.kind == "degree":
            K = F[q.args[0]]
            details = {"degree": str(K.degree(over)), "transcendence_degree": K.td(over)}
        elif q.kind == "classify":
            K = F[q.args[0]]
            prof = classify(K, over)
            details = {
                "shape": prof.shape.value,
                "separable_degree": str(prof.separable_degree),
                "insep_exponent": prof.insep_exponent,
                "steps": [f"{n}: {lab}" for n, lab in prof.labels],
                "insep_generators": [f"{g.name}: X^{K.characteristic}^{g.m} - ({g.a})" for g in prof.generators],
            }
            if prof.reason:
                details["reason"] = prof.reason
        elif q.kind == "minpoly":
            K = F[q.args[1]]
            x = K.parse(q.args[0])
            try:
                f = minpoly_of_element(K, x, over)
            except InfiniteDegree as exc:
                raise ValueError(str(exc)) from exc
            details = {"element": format_element(K, x), "minpoly": str(f), "degree": f._deg()}
        return {"verdict": None, "noetherian": None, "dim": None, "rule_chain": [], "witnesses": [],
                "assumptions": [], "details": details}


def run_session(session: Session) -> Report:
    """Run every statement in order. A failed definition stops the session; a failed query does not."""
    env = Environment()
    report = Report()
    for stmt in session.statements:
        if isinstance(stmt, Query):
            rec = {"schema_version": SCHEMA_VERSION, "query": stmt.describe(), "line": stmt.line}
            try:
                rec.update(env.answer(stmt))
            except _REJECTIONS as exc:
                err = _semantic(exc, stmt.line, 1)
                report.errors.append(err)
                rec["error"] = {"kind": err.cause, "message": err.message}
            report.records.append(rec)
            continue
        try:
            if isinstance(stmt, BaseDef):
                report.bindings.append(env.define_base(stmt))
            elif isinstance(stmt, FieldDef):
                report.bindings.append(env.define_field(stmt))
            else:
                report.bindings.append(env.define_algebra(stmt))
        except DslError as err:
            report.errors.append(err)
            return report
        except _REJECTIONS as exc:
            report.errors.append(_semantic(exc, stmt.line, 1))
            return report
    return report
