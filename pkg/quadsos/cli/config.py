# This code is part of quadsos.
#
# (C) Copyright quadsos developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.
"""
Run configuration of the command line front end.
"""

import logging
import os
from dataclasses import dataclass, fields
from typing import Any, Dict, Mapping, Optional, Tuple

from quadsos.exceptions import QuadSosError
from quadsos.representation.decision import EXHAUSTIVE, PRUNED

THREADS_ENV = "QUADSOS_THREADS"

FORMATS = ("csv", "json", "text")

ORACLE_FIELDS = (2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 21)
"""Fields checked by ``verify-oracle`` when no ``--d`` is given."""

FAMILIES = ("t2m1", "odd-sq-m4")


def resolve_threads(flag: Optional[int] = None, environ: Optional[Mapping[str, str]] = None) -> int:
    """Worker count from the flag, else the environment, else the number of CPUs."""
    if flag is not None:
        return flag
    environ = os.environ if environ is None else environ
    raw = environ.get(THREADS_ENV, "").strip()
    if raw:
        try:
            return int(raw)
        except ValueError as err:
            raise QuadSosError(f"{THREADS_ENV}={raw!r} is not an integer.") from err
    return os.cpu_count() or 1


@dataclass
class RunConfig:
    """Every parameter of one command line run.

    Unset fields take the values of :meth:`_default_options`; :meth:`_verify_parameters`
    runs on construction.
    """

    command: str
    m: Optional[int] = None
    m_from: Optional[int] = None
    m_to: Optional[int] = None
    m_max: Optional[int] = None
    d: Optional[int] = None
    d_values: Tuple[int, ...] = ()
    d_max: Optional[int] = None
    d_from: Optional[int] = None
    d_to: Optional[int] = None
    ref_from: Optional[int] = None
    ref_to: Optional[int] = None
    factor: Optional[float] = None
    mode: str = PRUNED
    emit_bounds: bool = False
    trace_max: Optional[int] = None
    family: Optional[str] = None
    t_max: Optional[int] = None
    threads: int = 1
    out: Optional[str] = None
    fmt: str = "text"
    progress: bool = True
    log_level: int = logging.INFO

    def __post_init__(self):
        self._verify_parameters()

    @classmethod
    def _default_options(cls, command: str) -> Dict[str, Any]:
        """Default options of a subcommand.

        Options:
            fmt (str): ``csv`` for the listings, ``text`` for everything else.
            d_values (tuple): fields checked by ``verify-oracle``.
            trace_max (int): largest trace of the oracle check.
            t_max, m_max (int): family ranges.
            d_max (int): largest ``d`` of the structure check; for sweeps None selects
                the corollary bound.
            d_from, d_to, ref_from, ref_to (int): ranges of the complexity check.
            factor (float): admissible growth of the normalized complexity.
        """
        options: Dict[str, Any] = {"fmt": "text"}
        if command in ("sweep", "table"):
            options["fmt"] = "csv"
        elif command == "verify-oracle":
            options.update(d_values=ORACLE_FIELDS, trace_max=200)
        elif command == "family":
            options.update(family="t2m1", t_max=40, m_max=500)
        elif command == "structure":
            options.update(d_max=10**5)
        elif command == "lemma":
            options.update(m_max=12, d_max=80)
        elif command == "verify-bounds":
            options.update(m_max=100)
        elif command == "complexity":
            options.update(
                d_from=10**6, d_to=10**6 + 10**4, ref_from=10**4, ref_to=2 * 10**4, factor=4.0
            )
        return options

    @classmethod
    def from_options(cls, command: str, **values) -> "RunConfig":
        """Merge ``values`` over the defaults of ``command``; None means unset."""
        known = {f.name for f in fields(cls)}
        options = cls._default_options(command)
        options.update({k: v for k, v in values.items() if k in known and v is not None})
        options["threads"] = resolve_threads(options.get("threads"))
        return cls(command=command, **options)

    def _verify_parameters(self):
        """
        Verify input correctness, raise QuadSosError if needed.

        Raises:
            QuadSosError : Error for invalid input.
        """
        if self.threads < 1:
            raise QuadSosError(f"The worker count {self.threads} must be at least 1.")
        if self.fmt not in FORMATS:
            raise QuadSosError(f"Unknown output format {self.fmt!r}; use one of {FORMATS}.")
        if self.mode not in (PRUNED, EXHAUSTIVE):
            raise QuadSosError(f"Unknown sweep mode {self.mode!r}.")
        for name in ("m", "m_from", "m_to", "m_max", "trace_max"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise QuadSosError(f"{name}={value} must be a positive integer.")
        if self.m_from is not None and self.m_to is not None and self.m_from > self.m_to:
            raise QuadSosError(f"The range m={self.m_from}..{self.m_to} is empty.")
        if self.d_max is not None and self.d_max < 2:
            raise QuadSosError(f"d_max={self.d_max} must be at least 2.")
        for lo, hi in ((self.d_from, self.d_to), (self.ref_from, self.ref_to)):
            if lo is not None and hi is not None and not 2 <= lo <= hi:
                raise QuadSosError(f"The range d={lo}..{hi} is empty or below 2.")
        if self.factor is not None and self.factor <= 0:
            raise QuadSosError(f"factor={self.factor} must be positive.")
        if self.family is not None and self.family not in FAMILIES:
            raise QuadSosError(f"Unknown family {self.family!r}; use one of {FAMILIES}.")
        if self.t_max is not None and self.t_max < 2:
            raise QuadSosError(f"t_max={self.t_max} must be at least 2.")
