"""Constructors and materialization for every twisting element in scope.

A TwistFactor is exp(sum of left_a x right_a) kept symbolic; a TwistSequence
lists factors in application order (factors[0] acts on the undeformed
algebra first), so the materialized product puts later factors on the left:

    materialize([f0, f1, ..., fk]) = M(fk) ... M(f1) M(f0)

Inverses are exact per-factor exp(-argument) products, never generic matrix
inversion.
"""

from dataclasses import dataclass
from typing import Tuple

from .errors import IndexOutOfRange, NotApplicable
from .exact import SparseMatrix, analytic_apply, EXP
from .expr import (
    Expr,
    Morphism,
    add,
    counit_eval,
    eval_tensor_pairs,
    gen,
    mul,
    scal,
    sigma,
    sigma_power,
    sigma_exponential,
)
from .rationals import rat
from .roots import cartan_element, carrier_generators, chain_plan


@dataclass(frozen=True)
class TwistFactor:
    """exp(sum of left x right) over gl(N)."""

    name: str
    n: int
    terms: Tuple[Tuple[Expr, Expr], ...]


def twist_factor(name: str, n: int, terms) -> TwistFactor:
    terms = tuple(terms)
    for left, _ in terms:
        if counit_eval(left) != 0:
            raise ValueError(f"{name}: left leg has nonzero counit")
    return TwistFactor(name, n, terms)


@dataclass(frozen=True)
class TwistSequence:
    """Factors in application order; empty sequence is the trivial twist."""

    factors: Tuple[TwistFactor, ...]
    n: int

    @property
    def name(self) -> str:
        return "*".join(f.name for f in reversed(self.factors)) or "1"

    def then(self, *more: TwistFactor) -> "TwistSequence":
        return TwistSequence(self.factors + tuple(more), self.n)


def sequence(*factors: TwistFactor, n: int = None) -> TwistSequence:
    if not factors and n is None:
        raise ValueError("empty sequence needs an explicit n")
    n = n if n is not None else factors[0].n
    if any(f.n != n for f in factors):
        raise IndexOutOfRange("sequence factors must share N")
    return TwistSequence(tuple(factors), n)


# -- the concrete factors ---------------------------------------------------


def jordanian_factor(n: int, k: int) -> TwistFactor:
    """Chain-step Jordanian exp(H_{k,N-k+1} x sigma_{k,N-k+1})."""
    top = n - k + 1
    if not (1 <= k <= n and 1 <= top <= n and k < top):
        raise IndexOutOfRange(f"jordanian step k={k} invalid for gl({n})")
    return twist_factor(
        f"J({k},{top})", n, [(cartan_element(n, k, top), sigma(k, top))]
    )


def extension_factor(n: int, k: int, r: int, beta=rat(1, 2)) -> TwistFactor:
    """exp(E_{k,r} x E_{r,N-k+1} e^{-beta*sigma_{k,N-k+1}}); beta = 1/2 in chains."""
    top = n - k + 1
    if not (1 <= k < r < top <= n):
        raise IndexOutOfRange(f"extension (k={k}, r={r}) invalid for gl({n})")
    beta = rat(beta)
    right = mul(gen(r, top), sigma_power(-beta, k, top))
    return twist_factor(f"E({k},{r},{top})", n, [(gen(k, r), right)])


def generic_jordanian_factor(n: int, r: int, alpha) -> TwistFactor:
    """Jordanian on the generic carrier H' = alpha*E_11 - beta*E_NN."""
    h, _, _, _ = carrier_generators(n, r, alpha)
    return twist_factor(f"Jg(a={rat(alpha)})", n, [(h, sigma(1, n))])


def generic_extension_factor(n: int, r: int, alpha) -> TwistFactor:
    """exp(A x B e^{-beta*sigma}) on the generic carrier, beta = 1 - alpha."""
    _, a, b, _ = carrier_generators(n, r, alpha)
    beta = 1 - rat(alpha)
    return twist_factor(
        f"Eg(r={r},b={beta})", n, [(a, mul(b, sigma_power(-beta, 1, n)))]
    )


def extended_twist_generic(n: int, r: int, alpha) -> TwistSequence:
    """Extended Jordanian twist: extension applied after the Jordanian."""
    return sequence(
        generic_jordanian_factor(n, r, alpha), generic_extension_factor(n, r, alpha)
    )


def chain_twist(n: int, p: int) -> TwistSequence:
    """Full chain: per step, Jordanian then every constituent extension."""
    plan = chain_plan(n, p)
    factors = []
    for k, step in enumerate(plan.steps):
        factors.append(jordanian_factor(n, k + 1))
        for root in step.pi_prime:
            factors.append(extension_factor(n, k + 1, root.j))
    return sequence(*factors, n=n)


def extension_block(n: int, k: int) -> Tuple[TwistFactor, ...]:
    """All extension factors of chain step k-1 (1-based k), full constituent set."""
    return tuple(extension_factor(n, k, r) for r in range(k + 1, n - k + 1))


def external_factor(n: int, which: str) -> TwistFactor:
    """External twisting factors for the 2-Jordanian-twisted algebra, N > 5.

    E0tilde couples row 1 to the corner E_{2,N}/E_{N-1,N} pair with a
    quadratic first leg; E1tilde is its image under the renumbering
    (1 <-> 2, N-1 <-> N).
    """
    if n < 6:
        raise NotApplicable("external factors need N > 5")
    half = rat(1, 2)
    if which == "E0tilde":
        first = add(
            gen(1, 2),
            mul(scal(half), gen(1, n - 1)),
            mul(gen(1, n - 1), cartan_element(n, 2, n - 1)),
        )
        term1 = (first, mul(gen(2, n), sigma_exponential((-half, 1, n), (-half, 2, n - 1))))
        term2 = (
            gen(1, n - 1),
            mul(gen(n - 1, n), sigma_exponential((-half, 1, n), (half, 2, n - 1))),
        )
        return twist_factor("E0~", n, [term1, term2])
    if which == "E1tilde":
        first = add(
            gen(2, 1),
            mul(scal(half), gen(2, n)),
            mul(gen(2, n), cartan_element(n, 1, n)),
        )
        term1 = (first, mul(gen(1, n - 1), sigma_exponential((-half, 1, n), (-half, 2, n - 1))))
        term2 = (
            gen(2, n),
            mul(gen(n, n - 1), sigma_exponential((half, 1, n), (-half, 2, n - 1))),
        )
        return twist_factor("E1~", n, [term1, term2])
    raise ValueError(f"unknown external factor {which!r}")


def alternative_chain(n: int) -> TwistSequence:
    """The reordered 2-chain that starts from J1 and uses the maximal
    constituent set {1} + [3, N-2] + {N} for the root e_2 - e_{N-1}.

    The maximal first step absorbs indices 2 and N-1, so the second step's
    extensions for e_1 - e_N run over the remaining block interior only.
    """
    if n < 6:
        raise NotApplicable("alternative chain needs N > 5")
    factors = [jordanian_factor(n, 2)]
    for r in (1, *range(3, n - 1), n):
        right = mul(gen(r, n - 1), sigma_power(rat(-1, 2), 2, n - 1))
        factors.append(twist_factor(f"E'(2,{r},{n-1})", n, [(gen(2, r), right)]))
    factors.append(jordanian_factor(n, 1))
    factors.extend(extension_factor(n, 1, r) for r in range(3, n - 1))
    return sequence(*factors, n=n)


# -- materialization --------------------------------------------------------


def materialize_factor(
    factor: TwistFactor, left: Morphism, right: Morphism, inverse: bool = False
) -> SparseMatrix:
    arg = eval_tensor_pairs(factor.terms, left, right)
    if inverse:
        arg = -arg
    return analytic_apply(EXP, arg)


def materialize(
    seq: TwistSequence, left: Morphism, right: Morphism, inverse: bool = False
) -> SparseMatrix:
    """Product of factor exponentials; later (outer) factors on the left.

    The inverse is the reversed product of exp(-argument) factors and is a
    two-sided exact inverse of the forward product.
    """
    out = SparseMatrix.identity(left.dim * right.dim)
    if not inverse:
        for f in seq.factors:
            out = materialize_factor(f, left, right) * out
    else:
        for f in seq.factors:
            out = out * materialize_factor(f, left, right, inverse=True)
    return out
