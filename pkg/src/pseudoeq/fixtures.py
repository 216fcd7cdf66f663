"""The finite algebras used as worked examples throughout the package.

* ``fixture_b``: the four-element Boolean lattice 0 < a, b < 1 with its
  invariant, commutative, symmetric equality operations.
* ``fixture_a``: same lattice, an equality algebra (~ = ∽) that is not
  invariant but has the same implication structure as B.
* ``fixture_c``: the chain 0 < a < b < 1 equality algebra on which the
  identity map is a type I but not a type II internal state.
"""
from .algebra import build_algebra, trivial_algebra
from .bck import build_hoop

DIAMOND = ["0", "a", "b", "1"]

DIAMOND_MEET = [
    ["0", "0", "0", "0"],
    ["0", "a", "0", "a"],
    ["0", "0", "b", "b"],
    ["0", "a", "b", "1"],
]

CHAIN_MEET = [
    ["0", "0", "0", "0"],
    ["0", "a", "a", "a"],
    ["0", "a", "b", "b"],
    ["0", "a", "b", "1"],
]

B_TILDE = [
    ["1", "b", "a", "0"],
    ["1", "1", "a", "a"],
    ["1", "b", "1", "b"],
    ["1", "1", "1", "1"],
]

B_BTILDE = [
    ["1", "1", "1", "1"],
    ["b", "1", "b", "1"],
    ["a", "a", "1", "1"],
    ["0", "a", "b", "1"],
]

# the implication of B read as a BCK(P)-lattice, and its product
B_ARROW = B_BTILDE

B_PROD = [
    ["0", "0", "0", "0"],
    ["0", "a", "0", "a"],
    ["0", "0", "b", "b"],
    ["0", "a", "b", "1"],
]

A_TILDE = [
    ["1", "b", "a", "0"],
    ["b", "1", "0", "a"],
    ["a", "0", "1", "b"],
    ["0", "a", "b", "1"],
]

C_TILDE = [
    ["1", "a", "0", "0"],
    ["a", "1", "a", "a"],
    ["0", "a", "1", "b"],
    ["0", "a", "b", "1"],
]


def fixture_b():
    return build_algebra(DIAMOND, DIAMOND_MEET, B_TILDE, B_BTILDE, "1")


def fixture_a():
    return build_algebra(DIAMOND, DIAMOND_MEET, A_TILDE, A_TILDE, "1")


def fixture_c():
    return build_algebra(DIAMOND, CHAIN_MEET, C_TILDE, C_TILDE, "1")


def hoop_b():
    """B as a commutative pseudo-hoop (⇝ = →)."""
    return build_hoop(DIAMOND, B_PROD, B_ARROW, B_ARROW, "1")


def trivial():
    return trivial_algebra("1")


ALL = {"A": fixture_a, "B": fixture_b, "C": fixture_c, "trivial": trivial}
