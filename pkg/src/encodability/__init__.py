"""Encodability of simple types over a single base type of naturals.

The library decides, for any two types built from N with arrows and
binary products, whether the first can be encoded in the second as a
definable retract, and produces machine-checked lambda-term witnesses
(an encoder/decoder pair) whenever the answer is yes.  The decision
works through ordinal ranks in Cantor normal form below epsilon_0: the
rank map is a bijection from canonical types onto the nonzero ordinals,
encodability is exactly rank comparison, and rank equality is exactly
trivial isomorphism.
"""

from .canonical import (
    canonicalize,
    compare_types,
    is_canonical,
    rank,
    trivially_isomorphic,
    type_of_ordinal,
)
from .coercions import IsoWitness, from_canonical_term, iso_witness, to_canonical_term
from .derivations import (
    ExpMono,
    Fault,
    LeDerivation,
    OmegaStep,
    Refl,
    SumMono,
    Succ,
    Trans,
    check_derivation,
    derivation_fault,
    derive_le,
    exp_mono,
    omega_step,
    refl,
    succ,
    sum_mono,
    trans,
)
from .normalize import equal_terms, kernel_name, normalize
from .ordinals import (
    OMEGA,
    ONE,
    ZERO,
    Ordering,
    Ordinal,
    cantor_add,
    compare_ordinals,
    from_int,
    is_cantor_sum,
    omega_pow,
    omega_times,
    parse_ordinal,
    print_ordinal,
    successor,
)
from .synthesis import (
    Composite,
    FromDerivation,
    FromIso,
    NotEncodable,
    Retraction,
    synth_clause,
    synth_retraction,
)
from .terms import (
    App,
    Fst,
    IfN,
    Lam,
    Num,
    Pair,
    Snd,
    Term,
    TypeCheckError,
    Var,
    parse_term,
    print_term,
    typecheck,
)
from .typesyntax import (
    Arrow,
    Base,
    N,
    ParseError,
    Prod,
    SimpleType,
    level,
    parse_type,
    print_type,
    type_size,
)
from .verify import (
    SemanticFailure,
    VerifyReport,
    generate_inhabitant,
    verify_semantic,
    verify_symbolic,
)

__version__ = "0.1.0"
