"""Burning combs: greedy sequences, closed forms, exact search and asymptotics."""

from .burn import BurningSequence, BurnReport, simulate_strict, verify_cover
from .comb import CombGraph, GeneralGraph, ball, comb, distance
from .greedy import greedy_comb, greedy_path_forest, t_greedy, t_greedy_tooth_fast

__version__ = "0.1.0"
