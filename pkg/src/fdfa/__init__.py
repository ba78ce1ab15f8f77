"""Families of DFAs (FDFAs) as acceptors of omega-regular languages."""

from .algebra import (BudgetExceeded, EmptinessWitness, SaturationReport, Verdict, check_saturation_bounded,
                      check_saturation_exact, complement, containment_witness, emptiness_witness, equality_witness,
                      intersect, is_contained, is_empty, is_equal, is_universal, union,
                      universality_counterexample)
from .automata import (DFA, Alphabet, Automaton, AutomatonError, BuchiStates, CoBuchiStates, FinalStates,
                       OmegaAutomaton, ParityColors, complete, det_accepts_up, dfa_and, dfa_or, product,
                       reachable_states, run_dfa)
from .core import FDFA, FdfaSize, NormalizedPair, accepts, normalize, size, validate
from .families import fig1_saturated, fig1_unsaturated, gen_ln, ln_semantic_member
from .serialize import Document, DocumentError, parse, parse_text, serialize
from .translations import (NBA, build_mq, build_nqf, dba_to_fdfa, dca_to_fdfa, dpa_to_fdfa, fdfa_to_nba,
                           nba_accepts_up, nba_state_bound)
from .words import UPWord, canonicalize, primitive_root, up_equal, up_prefix

__all__ = [name for name in dir() if not name.startswith("_")]
