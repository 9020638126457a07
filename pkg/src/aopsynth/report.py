"""Machine-readable synthesis reports with embedded bound formulas."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

from . import bounds


@dataclass
class BoundInfo:
    depth: Optional[int]
    size: Optional[float]
    depth_formula: str
    size_formula: str


def aop_bounds(m: int, n: int, mode: str,
               measured_depth: Optional[int] = None) -> BoundInfo:
    if n == 0:
        bd = bounds.aop_depth_bound(m)
        df = ("1 (m = 2)" if m == 2
              else "floor(log2 m + log2 log2 m + 0.65)")
    else:
        bd = bounds.extended_aop_depth_bound(n, m)
        df = "d_min(n, m)"
    if mode == "formula":
        bs = (m * measured_depth + n - 1) if measured_depth is not None else None
        sf = "m * depth + n - 1"
    elif n == 0:
        bs = bounds.aop_size_bound(m)
        sf = "ceil(3.67 m - 2)"
    else:
        bs = bounds.extended_aop_size_bound(n, m)
        sf = "3.67 m + n + rho(n) - 2"
    return BoundInfo(bd, bs, df, sf)


def adder_bounds(construction: str, n: int, f: int = 0) -> BoundInfo:
    if construction == "ripple":
        v = bounds.ripple_depth(n)
        return BoundInfo(v, float(v), "2 n - 2", "2 n - 2")
    if construction == "lf":
        return BoundInfo(
            bounds.lf_adder_depth_bound(n, f),
            float(bounds.lf_adder_size_bound(n, f)),
            "2 (ceil(log2 n) + f)", "ceil(6 (1 + 2^-f) n)")
    if construction == "halved":
        return BoundInfo(bounds.halved_depth_bound(n),
                         bounds.halved_size_bound(n), "n + 2", "3.5 n")
    if construction == "a1":
        return BoundInfo(
            bounds.a1_depth_bound(n), bounds.a1_size_bound(n),
            "floor(log2 n + log2 log2 n + 2.65)", "6.2 n log2 n")
    if construction == "a2":
        return BoundInfo(
            bounds.a2_depth_bound(n), bounds.a2_size_bound(n),
            "floor(log2 n + log2 log2 n + log2 log2 log2 n + 6.6)", "21.6 n")
    if construction == "a3":
        return BoundInfo(
            bounds.a3_depth_bound(n), bounds.a3_size_bound(n),
            "floor(log2 n + log2 log2 n + log2 log2 log2 n + 7.6)", "16.7 n")
    if construction == "percarry":
        return BoundInfo(
            bounds.percarry_depth_bound(n), bounds.percarry_size_bound(n),
            "max_i floor(log2(2i-1) + log2 log2(2i-1) + 0.65)",
            "sum_i ceil(3.67 (2i-1) - 2)")
    raise ValueError(f"unknown construction {construction!r}")


@dataclass
class SynthReport:
    construction: str
    kind: str                    # "aop" or "adder"
    size_param: int              # m for AND-OR paths, n for adders
    depth: int
    size: int
    fanout: int
    bound_depth: Optional[int]
    bound_size: Optional[float]
    bound_depth_formula: str
    bound_size_formula: str
    verified: dict
    wall_time_ms: float
    gate_categories: Optional[dict] = None
    extras: dict = field(default_factory=dict)

    @property
    def bounds_ok(self) -> bool:
        ok = True
        if self.bound_depth is not None:
            ok &= self.depth <= self.bound_depth
        if self.bound_size is not None:
            ok &= self.size <= self.bound_size + 1e-9
        return ok

    def violated(self) -> list[str]:
        out = []
        if self.bound_depth is not None and self.depth > self.bound_depth:
            out.append(
                f"depth {self.depth} > {self.bound_depth} "
                f"[{self.bound_depth_formula}]")
        if self.bound_size is not None and self.size > self.bound_size + 1e-9:
            out.append(
                f"size {self.size} > {self.bound_size:g} "
                f"[{self.bound_size_formula}]")
        return out

    def to_dict(self) -> dict:
        doc = asdict(self)
        doc["pass"] = self.bounds_ok and self.verified.get("ok", True)
        return doc
