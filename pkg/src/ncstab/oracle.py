"""Brute-force semistability oracle on the standard heart of representations.

Catalog objects have explicit module representatives with 0/1 matrices; over
the two-element field every subrepresentation can be enumerated outright for
small dimension vectors.  An admissible central charge (positive imaginary
part on all three simples) makes the representation category a heart with
phases in (0, 1), and semistability reduces to the slope test: no
subrepresentation of strictly larger phase.  This is an independent check of
the chart classifier on the one chart containing the heart.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .angles import Phase, phase_from_charge
from .classifier import SearchBudget, semistable
from .gaussian import GaussianRational, cross
from .quiver import ExcObject, KClass, M, MP, a, b, format_object
from .stability import A_M_B, CentralCharge, ChartId, StabilityPoint, make_point


class CapExceeded(RuntimeError):
    """Total dimension too large for exhaustive subspace enumeration."""


DEFAULT_DIM_CAP = 12


@dataclass(frozen=True)
class MatrixRep:
    """Representation with one F_2 matrix per arrow, rows as bitmasks."""

    dims: KClass
    map_xz: tuple[int, ...]
    map_xy: tuple[int, ...]
    map_yz: tuple[int, ...]


def _proj_drop_last(m: int) -> tuple[int, ...]:
    return tuple(1 << i for i in range(m))


def _proj_drop_first(m: int) -> tuple[int, ...]:
    return tuple(1 << (i + 1) for i in range(m))


def _incl_pad_last(m: int) -> tuple[int, ...]:
    return tuple(1 << i for i in range(m)) + (0,)


def _incl_pad_first(m: int) -> tuple[int, ...]:
    return (0,) + tuple(1 << i for i in range(m))


def _identity(m: int) -> tuple[int, ...]:
    return tuple(1 << i for i in range(m))


def module_representative(obj: ExcObject) -> tuple[ExcObject, int]:
    """(module-shaped object, homological shift stripped off)."""
    base = obj.at_shift_zero()
    if base.kind == "a":
        return (base, obj.shift) if base.m <= 0 else (base, obj.shift + 1)
    if base.kind == "b":
        return (base, obj.shift) if base.m <= 0 else (base, obj.shift + 1)
    return base, obj.shift


def rep_of(obj: ExcObject) -> MatrixRep:
    """Explicit matrices of the module representative of a catalog object."""
    kind, m = obj.kind, obj.m
    if kind == "M":
        return MatrixRep(KClass(0, 0, 1), (), (0,), ())
    if kind == "Mp":
        return MatrixRep(KClass(1, 1, 0), (1,), (), ())
    if kind == "a":
        if m <= 0:  # x = K^{n+1}, z = K^n, y = K^n
            n = -m
            return MatrixRep(
                KClass(n + 1, n, n),
                _proj_drop_last(n), _proj_drop_first(n), _identity(n),
            )
        n = m - 1    # x = K^n, z = K^{n+1}, y = K^{n+1}
        return MatrixRep(
            KClass(n, n + 1, n + 1),
            _incl_pad_last(n), _incl_pad_first(n), _identity(n + 1),
        )
    if kind == "b":
        if m <= 0:  # x = K^{n+1}, z = K^n, y = K^{n+1}
            n = -m
            return MatrixRep(
                KClass(n + 1, n, n + 1),
                _proj_drop_last(n), _identity(n + 1), _proj_drop_first(n),
            )
        n = m - 1    # x = K^n, z = K^{n+1}, y = K^n
        return MatrixRep(
            KClass(n, n + 1, n),
            _incl_pad_last(n), _identity(n), _incl_pad_first(n),
        )
    raise ValueError(f"no module representative for {obj}")


def _apply(rows: tuple[int, ...], v: int) -> int:
    out = 0
    for i, mask in enumerate(rows):
        if bin(mask & v).count("1") % 2:
            out |= 1 << i
    return out


@lru_cache(maxsize=None)
def _subspaces(dim: int) -> tuple[frozenset[int], ...]:
    """All F_2-subspaces of F_2^dim, each as its full element set."""
    spaces = []
    for k in range(dim + 1):
        for pivots in combinations(range(dim), k):
            free_positions = [
                (r, c)
                for r in range(k)
                for c in range(pivots[r] + 1, dim)
                if c not in pivots
            ]
            for bits in range(1 << len(free_positions)):
                basis = [1 << pivots[r] for r in range(k)]
                for idx, (r, c) in enumerate(free_positions):
                    if (bits >> idx) & 1:
                        basis[r] |= 1 << c
                span = {0}
                for vec in basis:
                    span |= {s ^ vec for s in span}
                spaces.append(frozenset(span))
    return tuple(spaces)


@dataclass(frozen=True)
class SubrepDimSet:
    vectors: frozenset[tuple[int, int, int]]

    def __contains__(self, f: tuple[int, int, int]) -> bool:
        return f in self.vectors


def subrep_dim_vectors(rep: MatrixRep, cap: int = DEFAULT_DIM_CAP) -> SubrepDimSet:
    """Dimension vectors of all subrepresentations over F_2."""
    dx, dz, dy = rep.dims.x, rep.dims.z, rep.dims.y
    if dx + dz + dy > cap:
        raise CapExceeded(f"total dimension {dx + dz + dy} exceeds cap {cap}")
    out = set()
    spaces_z = _subspaces(dz)
    spaces_y = _subspaces(dy)
    for ux in _subspaces(dx):
        img_xz = {_apply(rep.map_xz, v) for v in ux}
        img_xy = {_apply(rep.map_xy, v) for v in ux}
        for uy in spaces_y:
            if not img_xy <= uy:
                continue
            img_yz = {_apply(rep.map_yz, v) for v in uy}
            need_z = img_xz | img_yz
            for uz in spaces_z:
                if need_z <= uz:
                    out.add((
                        len(ux).bit_length() - 1,
                        len(uz).bit_length() - 1,
                        len(uy).bit_length() - 1,
                    ))
    return SubrepDimSet(frozenset(out))


def _check_admissible(charge: CentralCharge):
    for name, z in (("x", charge.zx), ("z", charge.zz), ("y", charge.zy)):
        if z.im <= 0:
            raise ValueError(f"Im Z(S_{name}) must be positive, got {z}")


def _heart_charge_value(charge: CentralCharge, f: tuple[int, int, int]) -> GaussianRational:
    return charge.zx.scale(f[0]) + charge.zz.scale(f[1]) + charge.zy.scale(f[2])


def king_semistable(rep: MatrixRep, charge: CentralCharge,
                    cap: int = DEFAULT_DIM_CAP) -> bool:
    """Slope test: every proper nonzero subrepresentation has phase <= total."""
    _check_admissible(charge)
    dims = rep.dims.as_tuple()
    total = _heart_charge_value(charge, dims)
    for f in subrep_dim_vectors(rep, cap).vectors:
        if f == (0, 0, 0) or f == dims:
            continue
        # both values have positive imaginary part; larger phase = negative cross
        if cross(_heart_charge_value(charge, f), total) < 0:
            return False
    return True


def king_phase(rep: MatrixRep, charge: CentralCharge) -> Phase:
    _check_admissible(charge)
    return phase_from_charge(_heart_charge_value(charge, rep.dims.as_tuple()), 0)


def heart_point(charge: CentralCharge) -> StabilityPoint:
    """The chart presentation of the heart: simples a^0, M and b^1[-1]."""
    _check_admissible(charge)
    return make_point(
        ChartId(A_M_B, 0),
        (charge.zx, charge.zy, -charge.zz),
        (0, 0, 1),
    )


def _catalog(index_bound: int) -> list[ExcObject]:
    objs: list[ExcObject] = [M, MP]
    for m in range(-index_bound, index_bound + 1):
        objs.append(a(m))
        objs.append(b(m))
    return objs


def cross_check(charge: CentralCharge, index_bound: int,
                cap: int = DEFAULT_DIM_CAP,
                budget: SearchBudget | None = None) -> list[dict]:
    """Compare the oracle against the classifier on the heart chart.

    Covers every catalog object with |m| <= index_bound whose module
    representative fits under the dimension cap.  Phases are compared after
    undoing the homological shift between the object and its module shape.
    """
    point = heart_point(charge)
    report = []
    for obj in _catalog(index_bound):
        base, shift = module_representative(obj)
        rep = rep_of(base)
        entry: dict = {"object": format_object(obj)}
        total_dim = rep.dims.x + rep.dims.z + rep.dims.y
        if total_dim > cap:
            entry["skipped"] = f"dimension {total_dim} over cap {cap}"
            report.append(entry)
            continue
        oracle_ss = king_semistable(rep, charge, cap)
        cls_phase = semistable(point, obj, budget)
        entry["oracle"] = oracle_ss
        entry["classifier"] = cls_phase is not None
        if oracle_ss and cls_phase is not None:
            expected = king_phase(rep, charge).plus(shift)
            entry["phase_match"] = expected == cls_phase
        else:
            entry["phase_match"] = None
        if entry["oracle"] != entry["classifier"] or entry["phase_match"] is False:
            entry["note"] = "mismatch: investigate field-dependence"
        report.append(entry)
    return report
