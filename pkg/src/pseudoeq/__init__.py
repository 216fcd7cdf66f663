"""Finite pseudo equality algebras: axioms, BCK transforms, deductive systems,
pointed negations, internal states, Bosbach states and model search."""

from .algebra import (
    FiniteEqAlgebra,
    PropertyFlags,
    build_algebra,
    classify,
    derived_law_suite,
    is_pseudo_eq,
    verify_axioms,
)
from .bck import FiniteBckMs, FinitePseudoHoop, build_bck, build_hoop, phi, psi, roundtrip_report
from .bosbach import BosbachSolutionSpace, bosbach_bck_compare, compose_with_morphism, is_bosbach, solve_bosbach
from .deduction import congruences, enumerate_ds, generated_ds, quotient
from .document import AlgebraDocument, parse_document, render_document
from .pointed import PointedEqAlgebra, pointed_class, regular_elements
from .search import SearchSpec, canonical_form, enumerate_models, find_counterexample
from .states import (
    check_morphism,
    check_state,
    enumerate_morphisms,
    enumerate_states,
    extend_morphism,
    kernel,
    state_correspondence,
)

__version__ = "0.1.0"
