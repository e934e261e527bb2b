"""Lithuanian text normalization for speech synthesis front ends."""

from ._ltnorm import Normalizer, normalize, emit_rules, profiles

__all__ = ["Normalizer", "normalize", "emit_rules", "profiles"]
