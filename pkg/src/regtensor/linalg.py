"""Gaussian elimination over an arbitrary field object.

Vectors are sparse dicts {column: value}.  Used for minimal polynomials,
inverses in towers, ranks of m/m^2 matrices and coordinate solves.
"""

from __future__ import annotations

from typing import Sequence


class RowReducer:
    """Incrementally maintained reduced echelon basis with provenance tracking.

    ``add`` returns None when the vector is new, otherwise the combination of
    previously added vectors (by insertion index) that reproduces it.
    """

    def __init__(self, F):
        self.F = F
        self.rows: dict[int, tuple[dict, dict]] = {}  # pivot -> (row, combo)
        self.count = 0

    def _reduce(self, v: dict, combo: dict):
        F = self.F
        v = dict(v)
        for col in sorted(self.rows):
            c = v.get(col)
            if c is None or F.is_zero(c):
                continue
            row, rc = self.rows[col]
            for k, x in row.items():
                nv = F.sub(v.get(k, F.zero), F.mul(c, x))
                if F.is_zero(nv):
                    v.pop(k, None)
                else:
                    v[k] = nv
            for k, x in rc.items():
                nv = F.sub(combo.get(k, F.zero), F.mul(c, x))
                if F.is_zero(nv):
                    combo.pop(k, None)
                else:
                    combo[k] = nv
        return {k: x for k, x in v.items() if not F.is_zero(x)}, combo

    def add(self, v: dict):
        F = self.F
        idx = self.count
        self.count += 1
        r, combo = self._reduce(v, {idx: F.one})
        if not r:
            # v - sum(...) = 0 gives v as a combination of earlier vectors
            inv = F.inv(combo[idx])
            return {k: F.neg(F.mul(x, inv)) for k, x in combo.items() if k != idx}
        piv = min(r)
        inv = F.inv(r[piv])
        r = {k: F.mul(x, inv) for k, x in r.items()}
        combo = {k: F.mul(x, inv) for k, x in combo.items()}
        self.rows[piv] = (r, combo)
        return None

    @property
    def rank(self) -> int:
        return len(self.rows)


def rank(F, vectors: Sequence[dict]) -> int:
    rr = RowReducer(F)
    for v in vectors:
        rr.add(v)
    return rr.rank


def solve_linear(F, columns: Sequence[dict], rhs: dict, nrows: int | None = None):
    """Coefficients c with sum_i c_i * columns[i] == rhs, or None if inconsistent.

    The columns must be linearly independent.
    """
    rr = RowReducer(F)
    for i, col in enumerate(columns):
        if rr.add(col) is not None:
            raise ValueError(f"column {i} is linearly dependent on the earlier ones")
    combo = rr.add(rhs)
    if combo is None:
        return None
    return [combo.get(i, F.zero) for i in range(len(columns))]


def first_dependency(F, vectors):
    """Feed vectors until one depends on its predecessors; return (index, combination)."""
    rr = RowReducer(F)
    for i, v in enumerate(vectors):
        c = rr.add(v)
        if c is not None:
            return i, c
    return None


def intersect_spaces(F, U: Sequence[dict], V: Sequence[dict]) -> list[dict]:
    """A basis of span(U) ∩ span(V) (Zassenhaus: reduce rows (u, u) and (v, 0))."""
    width = 1 + max([max(v) for v in list(U) + list(V) if v] or [0])
    rr = RowReducer(F)
    for u in U:
        rr.add({**u, **{k + width: x for k, x in u.items()}})
    for v in V:
        rr.add(dict(v))
    out = []
    for piv, (row, _) in sorted(rr.rows.items()):
        if piv >= width:
            out.append({k - width: x for k, x in row.items()})
    return out


def nullspace(F, rows: Sequence[dict], ncols: int) -> list[dict]:
    """Basis of {n : row . n = 0 for every row}, via reduced row echelon form."""
    piv_rows: dict[int, dict] = {}
    for r in rows:
        v = {k: x for k, x in r.items() if not F.is_zero(x)}
        for col, pr in piv_rows.items():
            c = v.get(col)
            if c is not None:
                for k, x in pr.items():
                    nv = F.sub(v.get(k, F.zero), F.mul(c, x))
                    if F.is_zero(nv):
                        v.pop(k, None)
                    else:
                        v[k] = nv
        if not v:
            continue
        piv = min(v)
        inv = F.inv(v[piv])
        v = {k: F.mul(x, inv) for k, x in v.items()}
        for col, pr in list(piv_rows.items()):
            c = pr.get(piv)
            if c is not None:
                for k, x in v.items():
                    nv = F.sub(pr.get(k, F.zero), F.mul(c, x))
                    if F.is_zero(nv):
                        pr.pop(k, None)
                    else:
                        pr[k] = nv
        piv_rows[piv] = v
    out = []
    for f in range(ncols):
        if f in piv_rows:
            continue
        n = {f: F.one}
        for col, pr in piv_rows.items():
            c = pr.get(f)
            if c is not None:
                n[col] = F.neg(c)
        out.append(n)
    return out
