"""Reduction-versus-oracle verification grids and their records.

One record per (nu, z) point: the closed-form value, the series oracle
value, and the discrepancy.  The relative error is absolute error over
max(1, |oracle|), the convention used for every tolerance in this package.
Points where either side refuses to evaluate (branch guard, domain) are
recorded as Skipped with the refusing error's name, never as failures.
"""

from __future__ import annotations

import cmath
import csv
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import IO, Iterable, List, Sequence, Tuple

from .errors import BetaReduceError
from .oracles import beta_series
from .rationals import render_rational
from .reduction import incomplete_beta

VERIFY_CSV_HEADER = (
    "nu,z_re,z_im,reduction_re,reduction_im,oracle_re,oracle_im,"
    "oracle_method,abs_err,rel_err,status,note"
)


class Status(enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    SKIPPED = "Skipped"


@dataclass(frozen=True)
class VerificationRecord:
    nu: Fraction
    z: complex
    reduction_value: complex
    oracle_value: complex
    oracle_method: str
    abs_err: float
    rel_err: float
    status: Status
    note: str = ""


def default_z_grid() -> List[complex]:
    """Real points (0, 0.9] in steps of 0.05 plus a ring at |z| = 0.5."""
    reals = [complex(0.05 * k) for k in range(1, 19)]
    ring = [0.5 * cmath.exp(1j * math.pi * j / 6) for j in range(1, 12)]
    return reals + ring


def fraction_grid(q_max: int = 12) -> List[Fraction]:
    """All reduced proper fractions p/q with q <= q_max, ascending q then p."""
    fracs = []
    for q in range(2, q_max + 1):
        for p in range(1, q):
            if gcd(p, q) == 1:
                fracs.append(Fraction(p, q))
    return fracs


def default_nu_grid(
    n_max: int = 6, q_max: int = 12, side: str = "both"
) -> List[Fraction]:
    """Rational parameters n + p/q (and -n + p/q) over the standard ranges."""
    if side not in ("pos", "neg", "both"):
        raise ValueError(f"side must be pos, neg, or both, got {side!r}")
    fracs = fraction_grid(q_max)
    nus: List[Fraction] = []
    if side in ("pos", "both"):
        for n in range(0, n_max + 1):
            nus.extend(n + f for f in fracs)
    if side in ("neg", "both"):
        for n in range(1, n_max + 1):
            nus.extend(-n + f for f in fracs)
    return nus


def run_verification(
    nus: Sequence[Fraction],
    zs: Sequence[complex],
    tol: float,
) -> Tuple[List[VerificationRecord], int, int, int]:
    """Compare the reduction against the series oracle over a grid.

    Returns (records, passed, failed, skipped) with records in grid order.
    """
    records: List[VerificationRecord] = []
    passed = failed = skipped = 0
    for nu in nus:
        nu = Fraction(nu)
        for z in zs:
            z = complex(z)
            try:
                reduction = incomplete_beta(nu, 0, z)
                oracle = beta_series(nu, z)
            except BetaReduceError as exc:
                records.append(
                    VerificationRecord(
                        nu, z, 0j, 0j, "", 0.0, 0.0, Status.SKIPPED, type(exc).__name__
                    )
                )
                skipped += 1
                continue
            abs_err = abs(reduction - oracle.value)
            rel_err = abs_err / max(1.0, abs(oracle.value))
            status = Status.PASS if rel_err <= tol else Status.FAIL
            if status is Status.PASS:
                passed += 1
            else:
                failed += 1
            records.append(
                VerificationRecord(
                    nu,
                    z,
                    reduction,
                    oracle.value,
                    oracle.method.value,
                    abs_err,
                    rel_err,
                    status,
                )
            )
    return records, passed, failed, skipped


def write_verify_csv(records: Iterable[VerificationRecord], stream: IO[str]) -> None:
    """Emit verification records as CSV, LF line endings, no timestamps."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(VERIFY_CSV_HEADER.split(","))
    for rec in records:
        writer.writerow(
            [
                render_rational(rec.nu),
                repr(rec.z.real),
                repr(rec.z.imag),
                repr(rec.reduction_value.real),
                repr(rec.reduction_value.imag),
                repr(rec.oracle_value.real),
                repr(rec.oracle_value.imag),
                rec.oracle_method,
                repr(rec.abs_err),
                repr(rec.rel_err),
                rec.status.value,
                rec.note,
            ]
        )
