"""limattn: limited-attention analysis of finite choice functions.

Computes revealed relations from observed choices, decides membership
in each limited-attention model class, constructs explicit
(consideration filter, preference) explanations with welfare reports,
simulates every generative model, and verifies the documented benchmark
catalog by exhaustive census on small ground sets.
"""

from limattn.core import (
    ChoiceCorrespondence,
    ChoiceFunction,
    GroundSet,
    LinearOrder,
    Relation,
    RelationProps,
    Switch,
    bits_of,
    has_directed_cycle,
    label_order,
    max_elements,
    maximal_menu,
    relation_props,
    submenus,
    szpilrajn_extend,
    transitive_closure,
)
from limattn.relations import RevealedKind, find_switches, reduce_switch, reveal
from limattn.axioms import (
    FilterCheck,
    FilterKind,
    FilterWitness,
    art,
    axiom_alpha,
    corr_axiom,
    is_filter,
    optimal_filter_conditions,
)
from limattn.classify import ClassMembership, ClassWitness, classify
from limattn.forward import (
    CerModel,
    FilterOrder,
    ListTournament,
    Model,
    Shortlist,
    check_list_rational,
    simulate,
)
from limattn.explain import (
    Explanation,
    WelfareFact,
    common_preference,
    explain,
    gamma_triangle,
    quasi_transitive_rationalize,
    welfare_report,
)
from limattn.census import (
    CensusReport,
    FixtureReport,
    enumerate_choice_functions,
    run_census,
    verify_fixtures,
)
from limattn.fileformat import (
    parse_choice_file,
    parse_corr_file,
    parse_model_file,
    print_choice_file,
    print_corr_file,
    print_model_file,
)
from limattn import errors, fixtures

__version__ = "0.1.0"

__all__ = [
    # core values
    "GroundSet",
    "ChoiceFunction",
    "ChoiceCorrespondence",
    "Relation",
    "LinearOrder",
    "Switch",
    "RelationProps",
    # core operations
    "bits_of",
    "submenus",
    "max_elements",
    "maximal_menu",
    "relation_props",
    "transitive_closure",
    "has_directed_cycle",
    "szpilrajn_extend",
    "label_order",
    # revealed relations
    "RevealedKind",
    "reveal",
    "find_switches",
    "reduce_switch",
    # axioms and filters
    "axiom_alpha",
    "art",
    "corr_axiom",
    "FilterKind",
    "FilterCheck",
    "FilterWitness",
    "is_filter",
    "optimal_filter_conditions",
    # classification
    "ClassMembership",
    "ClassWitness",
    "classify",
    # forward models
    "FilterOrder",
    "Shortlist",
    "ListTournament",
    "CerModel",
    "Model",
    "simulate",
    "check_list_rational",
    # explanations
    "Explanation",
    "WelfareFact",
    "explain",
    "gamma_triangle",
    "common_preference",
    "quasi_transitive_rationalize",
    "welfare_report",
    # census
    "CensusReport",
    "FixtureReport",
    "enumerate_choice_functions",
    "run_census",
    "verify_fixtures",
    # file formats
    "parse_choice_file",
    "print_choice_file",
    "parse_corr_file",
    "print_corr_file",
    "parse_model_file",
    "print_model_file",
    # submodules
    "errors",
    "fixtures",
]
