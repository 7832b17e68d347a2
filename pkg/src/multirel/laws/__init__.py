"""Term language, law catalog, checker and finite algebras."""

from .algebra import AlgebraError, FiniteAlgebra, builtin_algebra
from .catalog import (REFUTED, VALID, Law, UnknownLawError, axiom_group,
                      catalog, get_law)
from .checker import (EXHAUSTIVE, HOLDS, INCONCLUSIVE, Sampled,
                      SearchSpaceError, SuiteReport, Verdict, check_algebra,
                      check_law, check_valid, eval_term, evaluate_at, hunt,
                      run_suite)
from .models import (AlgebraModel, MultirelModel, UnboundVariableError,
                     UnsupportedOperationError)
from .terms import (SortError, TermSyntaxError, parse_law, parse_term,
                    to_text)
