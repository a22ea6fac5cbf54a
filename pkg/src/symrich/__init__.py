"""Palindromic richness analysis for words invariant under finite symmetry groups.

The package analyzes infinite words (through deterministic prefix
generators) whose languages are closed under a finite group of morphisms
and antimorphisms of the free monoid: factor and palindromic complexity,
generalized palindromes and their return words, defect profiles, Rauzy and
symmetry graphs, and cross-verified richness verdicts.
"""

from .errors import (
    AlphabetError,
    ClosureError,
    ConfigError,
    ConsistencyError,
    GroupError,
    IndexRangeError,
    InsufficientPrefixError,
    SourceError,
    SymrichError,
)
from .graphs import (
    BispecialRecord,
    ComplexityIdentityRecord,
    RauzyGraph,
    SymmetryGraph,
    TlsVerdict,
    bispecial_check,
    complexity_identity,
    directed_symmetry_graph,
    rauzy_graph,
    tls_verdict,
    undirected_symmetry_graph,
)
from .index import ComplexityTable, LanguageIndex, factor_sets, stability_check
from .palindromes import (
    ClassicalRichness,
    DefectProfile,
    PalindromeWitness,
    ThetaRichness,
    classical_palindromes,
    classical_richness,
    complete_g_return_words,
    defect_profile,
    g_defect,
    g_lps,
    g_occurrences,
    g_palindrome,
    gamma_g,
    is_g_unioccurrent,
    palindrome_fixers,
    prefix_palindrome_table,
    prefix_table_csv,
    theta_lps,
    theta_palindromic_factors,
    theta_richness,
)
from .symmetry import SymmetryGroup, SymmetryMap, close, compose, dihedral_group
from .verify import (
    AlternationResult,
    CaseStudyReport,
    DefectSumCheck,
    RichnessReport,
    SubgroupResult,
    alternation_check,
    defect_sum_check,
    repro_hexa,
    repro_octa,
    subgroup_scan,
    verify,
    verify_text,
)
from .words import (
    Alphabet,
    DigitSumSource,
    FixedPointSource,
    LiteralSource,
    PeriodicSource,
    WordSource,
    apply_morphism,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
