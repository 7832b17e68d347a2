"""Finite binary multirelations: composition, domain, iteration and laws."""

from .core import (CONSTANTS, DuplicateLabelError, MultiRelation,
                   MultirelError, Universe, UniverseMismatchError,
                   UniverseOverflowError, UnknownLabelError, complement,
                   const, dumps, format_literal, from_json, from_pairs,
                   inter, is_subset, make_universe, par, parikh_seq,
                   parse_literal, seq, to_json, union)
from .structure import (ClassTag, NotSubidentityError, check_iso_roundtrips,
                        diamond, domain, eqv_nu, eqv_tau, is_in_class,
                        leq_nu, leq_tau, nu, tau, to_terminal, up_closure,
                        vectorize)
from .fixpoint import (FixpointError, FixpointResult, MonotoneFunctional,
                       gfp, infinity, is_deflationary, is_omega_trivial,
                       is_wellfounded, iter_star_bracket, iter_star_paren,
                       iter_star_powers, lfp, nabla, omega, omega_binary,
                       power, power_bracket, power_paren, star, star_binary)

__version__ = "0.1.0"
