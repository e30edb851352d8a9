"""Dynamic-assessment toolkit for the game of Go.

Feeds per-move engine analyses (top-5 suggestions with simulation counts
and win rates) through an FML-defined Mamdani fuzzy system to produce
linguistic game-situation verdicts, whole-game decisions, and a rendered
commentary. Exposed as a library, a streaming service, and a replay CLI.
"""

__version__ = "0.1.0"
