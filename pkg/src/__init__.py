"""
Quartic torsion: torsion growth of rational elliptic curves over quartic fields.
"""

__version__ = "0.1.0"
