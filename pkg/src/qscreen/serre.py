"""Scanner for singular vectors of a fixed lowering multidegree.

A candidate is a combination of lowering words of multidegree d (word w uses
d_j letters of type j), acting on the highest-weight state.  In the contour
basis the word F_{w_1} ... F_{w_n} lands exactly on the state U_{(w_1,...,
w_n)}, so candidates are vectors over the distinct arrangements of the
multiset d.  The candidate is singular when every raising operator kills it;
that is one homogeneous linear system per raising index, with one row per
target state of multidegree d - e_j.

The system is solved exactly over the phase-scalar field.  At a generic
weight a nonzero kernel means the combination is annihilated for *every*
weight — a quantized Serre-type relation made visible inside the module.  At
a concrete weight the kernel can jump: those are honest weight-specific
singular vectors.

The kernel is computed by fraction-free elimination (pivot row times current
row minus the cross term), which keeps every intermediate entry a Laurent
polynomial; divisions happen only in the final back-substitution and in the
normalization that makes each basis vector's first nonzero coefficient 1.
No polynomial gcd is ever taken, so reported coefficients may carry a common
factor such as (1 - z1^2); equality tests and specializations treat that
correctly, and a specialization that lands on the zero denominator raises
DenominatorVanishesError rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .contour import (
    FaultInjection,
    ModuleContext,
    NO_FAULTS,
    Seq,
    apply_raising,
    apply_raising_hat,
    render_vector,
    vec_is_zero,
)
from .phase import DenominatorVanishesError, PhaseScalar
from .rootdata import RootDatum, Weight


def enumerate_words(multidegree: Sequence[int]) -> list[Seq]:
    """All distinct letter arrangements of the multidegree, lex ascending."""
    counts = {j: d for j, d in enumerate(multidegree) if d > 0}
    if any(d < 0 for d in multidegree):
        raise ValueError("multidegree entries must be nonnegative")
    total = sum(counts.values())

    def rec(n: int):
        if n == 0:
            yield ()
            return
        for j in sorted(counts):
            if counts[j]:
                counts[j] -= 1
                for rest in rec(n - 1):
                    yield (j,) + rest
                counts[j] += 1

    return list(rec(total))


def nullspace(rows: list[list[PhaseScalar]], ncols: int,
              arity: int) -> list[list[PhaseScalar]]:
    """Exact kernel basis of the matrix, one vector per free column.

    Elimination is fraction-free; each returned vector is scaled so that its
    first nonzero coordinate is exactly 1.
    """
    rows = [list(r) for r in rows if not all(e.is_zero() for e in r)]
    pivots: list[tuple[int, int]] = []  # (row position, column)
    r = 0
    for c in range(ncols):
        cand = [i for i in range(r, len(rows)) if not rows[i][c].is_zero()]
        if not cand:
            continue
        # favor the sparsest pivot row to slow coefficient growth
        best = min(cand, key=lambda i: sum(len(e.num) for e in rows[i]))
        rows[r], rows[best] = rows[best], rows[r]
        pivot = rows[r][c]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                new_row = [pivot * rows[i][k] - f * rows[r][k]
                           for k in range(ncols)]
                # strip the common leading unit to slow coefficient growth
                unit = next((e.leading_unit() for e in new_row
                             if not e.is_zero()), None)
                if unit is not None:
                    new_row = [e / unit for e in new_row]
                rows[i] = new_row
        pivots.append((r, c))
        r += 1

    pivot_cols = {c for _, c in pivots}
    basis: list[list[PhaseScalar]] = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = [PhaseScalar.zero(arity) for _ in range(ncols)]
        vec[free] = PhaseScalar.one(arity)
        for rp, pc in pivots:
            if not rows[rp][free].is_zero():
                vec[pc] = -rows[rp][free] / rows[rp][pc]
        lead = next(x for x in vec if not x.is_zero())
        basis.append([x / lead for x in vec])
    return basis


@dataclass
class ScanResult:
    algebra: str
    multidegree: tuple[int, ...]
    weight: str
    words: list[Seq]
    basis: list[list[PhaseScalar]]
    residuals: list[dict[str, str]] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def basis_as_tokens(self) -> list[dict[str, str]]:
        out = []
        for vec in self.basis:
            entry = {}
            for word, coeff in zip(self.words, vec):
                if not coeff.is_zero():
                    token = " ".join(f"F{j+1}" for j in word) or "1"
                    entry[token] = coeff.render()
            out.append(entry)
        return out

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "multidegree": list(self.multidegree),
            "weight": self.weight,
            "dimension": self.dimension,
            "basis": self.basis_as_tokens(),
            "residual_checks": self.residuals,
        }

    def to_text(self) -> str:
        lines = [f"algebra: {self.algebra}  multidegree: {list(self.multidegree)}  "
                 f"weight: {self.weight}",
                 f"kernel dimension: {self.dimension}"]
        for k, entry in enumerate(self.basis_as_tokens()):
            lines.append(f"  vector {k + 1}:")
            for token, coeff in entry.items():
                lines.append(f"    {token}: {coeff}")
        for k, checks in enumerate(self.residuals):
            status = "ok" if all(v == "0" for v in checks.values()) else "NONZERO"
            lines.append(f"  residuals of vector {k + 1}: {status} "
                         + " ".join(f"{g}={v}" for g, v in checks.items()))
        return "\n".join(lines)


def _scan_context(datum: RootDatum, multidegree, weight, faults) -> ModuleContext:
    return ModuleContext(datum=datum, weight=weight,
                         depth=max(sum(multidegree), 1) + 1, faults=faults)


def singular_scan(datum: RootDatum, multidegree: Sequence[int],
                  weight: Weight = Weight(None),
                  faults: FaultInjection = NO_FAULTS) -> ScanResult:
    """Find all singular combinations of lowering words of one multidegree."""
    multidegree = tuple(int(d) for d in multidegree)
    if len(multidegree) != datum.rank:
        raise ValueError(f"multidegree needs {datum.rank} entries")
    ctx = _scan_context(datum, multidegree, weight, faults)
    words = enumerate_words(multidegree)
    col = {w: i for i, w in enumerate(words)}
    one = PhaseScalar.one(ctx.arity)

    rows: list[list[PhaseScalar]] = []
    for j in range(datum.rank):
        if multidegree[j] == 0:
            continue
        reduced = list(multidegree)
        reduced[j] -= 1
        targets = {t: k for k, t in enumerate(enumerate_words(reduced))}
        block = [[PhaseScalar.zero(ctx.arity) for _ in words] for _ in targets]
        for w in words:
            image = apply_raising_hat(ctx, j, {w: one}, clear_denominator=True)
            for t, coeff in image.items():
                block[targets[t]][col[w]] = coeff
        rows.extend(block)

    basis = nullspace(rows, len(words), ctx.arity)
    result = ScanResult(
        algebra=datum.name or "custom",
        multidegree=multidegree,
        weight="generic" if weight.is_generic else ",".join(
            str(c) for c in weight.coords),
        words=words,
        basis=basis,
    )
    result.residuals = [residual_checks(datum, words, vec, weight, faults)
                        for vec in basis]
    return result


def residual_checks(datum: RootDatum, words: list[Seq],
                    vec: Sequence[PhaseScalar], weight: Weight = Weight(None),
                    faults: FaultInjection = NO_FAULTS) -> dict[str, str]:
    """Recompute every raising image of a candidate with the full operator.

    This is the independent confirmation pass: it goes through the complete
    raising action (bracket denominators, Cartan factor and all) rather than
    the cleared matrix used by the solver.
    """
    md = [0] * datum.rank
    for j in (words[0] if words else ()):
        md[j] += 1
    ctx = _scan_context(datum, md, weight, faults)
    v = {w: c for w, c in zip(words, vec) if not c.is_zero()}
    out = {}
    for j in range(datum.rank):
        image = apply_raising(ctx, j, v)
        out[f"E{j+1}"] = "0" if vec_is_zero(image) else render_vector(image)
    return out


def specialize_vector(vec: Sequence[PhaseScalar],
                      datum: RootDatum, weight: Weight) -> list[PhaseScalar]:
    """Substitute a concrete weight into a generic kernel vector.

    Raises DenominatorVanishesError when the weight sits on the vanishing
    locus of some coefficient's denominator (an un-cancelled common factor,
    typically); callers are expected to report such weights, not skip them
    silently.
    """
    exps = [-weight.root_pairing(datum, j) for j in range(datum.rank)]
    return [c.substitute_z(exps) for c in vec]


def specialize_scan(result: ScanResult, datum: RootDatum,
                    weight: Weight) -> dict:
    """Specialize a generic scan at one concrete weight.

    Returns {"weight", "status", ...}: status "ok" carries the specialized
    basis and recomputed residuals, status "denominator-vanishes" reports
    the weight as lying on a vanishing locus.
    """
    label = ",".join(str(c) for c in weight.coords)
    try:
        basis = [specialize_vector(vec, datum, weight) for vec in result.basis]
    except DenominatorVanishesError as exc:
        return {"weight": label, "status": "denominator-vanishes",
                "detail": str(exc)}
    residuals = [residual_checks(datum, result.words, vec, weight)
                 for vec in basis]
    ok = all(v == "0" for checks in residuals for v in checks.values())
    return {"weight": label, "status": "ok" if ok else "residual-nonzero",
            "basis": [
                {(" ".join(f"F{j+1}" for j in w) or "1"): c.render()
                 for w, c in zip(result.words, vec) if not c.is_zero()}
                for vec in basis],
            "residual_checks": residuals}
