from .checks import CHECKS, Check, selected
from .scorecard import ScoreEntry, Scorecard, run_scorecard
