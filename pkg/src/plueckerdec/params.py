"""Shipped desk-scale parameter sets used by experiments and verification."""

from __future__ import annotations

from dataclasses import dataclass

from .gabidulin import GabidulinCode, make_code


@dataclass(frozen=True)
class ParamSet:
    q: int
    n: int
    k: int
    delta: int

    @property
    def ell(self) -> int:
        return self.n - self.k

    @property
    def rho(self) -> int:
        return self.ell * (self.k - self.delta + 1)

    @property
    def code_size(self) -> int:
        return self.q**self.rho

    def label(self) -> str:
        return f"q{self.q}_n{self.n}_k{self.k}_d{self.delta}"

    def build(self) -> GabidulinCode:
        return make_code(self.q, self.n, self.k, self.delta)


# Every set keeps q^rho small enough for exhaustive codeword enumeration.
SMALL_PARAMETER_SETS: tuple[ParamSet, ...] = tuple(
    ParamSet(q, k + ell, k, delta)
    for (k, ell, delta) in ((2, 2, 2), (2, 3, 2), (3, 3, 2), (3, 3, 3))
    for q in (2, 3)
) + (
    # q = 5 exercises nontrivial signs in minors and relations
    ParamSet(5, 4, 2, 2),
    ParamSet(5, 5, 2, 2),
)
