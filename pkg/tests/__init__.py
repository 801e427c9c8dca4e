"""
Test suite for the quartic torsion engine.
"""
