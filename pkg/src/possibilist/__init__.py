"""Possibilistic rule-based inference with explanations.

Uncertain rules carry a pair (s, r) of possibility degrees; a consultation
matches facts against rule conditions, combines the induced distributions
attribute by attribute, and keeps the trace that the explanation queries
read back.
"""

__version__ = "0.1.0"
