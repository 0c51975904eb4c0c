"""Self-similar groups, cone-partition bijections and their germs.

The heavy lifting lives in the compiled extension module; this package
re-exports its surface.
"""

from ._ssg import (  # noqa: F401
    BoundsError,
    DomainError,
    Element,
    EPrimeFrame,
    FormatError,
    GermSignature,
    Group,
    Nucleus,
    PeriodicNucleus,
    Point,
    Row,
    SeparatedSystem,
    Word,
    build_e_prime,
    build_f,
    builtin_group,
    builtin_names,
    contraction_depth,
    coset_witness,
    expand,
    germ_equal,
    germ_signature,
    identity_element,
    identity_word,
    make_element,
    nucleus,
    parse_element,
    parse_group,
    parse_point,
    parse_word,
    periodic_nucleus,
    phi,
    print_element,
    print_group,
    regular_cone,
    run_suite,
    separate_points,
    suite_names,
    tuple_transporter,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
