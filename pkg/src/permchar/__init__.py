"""permchar: exact character theory for finite permutation groups.

Builds semidirect products C_l^n : G from a group with a chosen subgroup,
computes induced characters and inner products in exact cyclotomic
arithmetic, detects Gassmann triples, and machine-checks the character
identities that distinguish non-conjugate subgroups with equal
permutation characters.
"""

__version__ = "0.1.0"
