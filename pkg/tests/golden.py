"""Frozen expected values, transcribed by hand from worked examples.

Nothing in here is computed by the package; tests compare package output
against these literals.
"""

# h = (3,3,3,4): the Ferrers-box generator set, as a set (duplicates collapse).
C_3334 = {
    "x1 + x2 + x3 + x4",
    "x1*x2 + x1*x3 + x1*x4 + x2*x3 + x2*x4 + x3*x4",
    "x1*x2*x3 + x1*x2*x4 + x1*x3*x4 + x2*x3*x4",
    "x1*x2*x3*x4",
    "x1 + x2 + x3",
    "x1*x2 + x1*x3 + x2*x3",
    "x1*x2*x3",
}

# h = (3,3,3,4): the four J generators, indexed i = 1..4.
J_3334 = [
    "x1 + x2 + x3 + x4",
    "x2^2 + x2*x3 + x2*x4 + x3^2 + x3*x4 + x4^2",
    "x3^3 + x3^2*x4 + x3*x4^2 + x4^3",
    "x4",
]

# Degree tuple of (3,3,3,4) in descending display order (beta_4, ..., beta_1).
BETA_3334_DESC = (1, 3, 2, 1)

# Hessenberg diagram of (3,3,4,4,5,6): '#' shaded, '.' unshaded, row 1 first.
DIAGRAM_334456 = ["#", "##", "###", "..##", "....#", ".....#"]
DYCK_334456 = "DDDRRDRRDRDR"

# The n = 4 matrices B and B^-1, entries as (sign, kind, lo) meaning
# sign * kind_{i-j}(lo..4); kind "e" or "h" (complete), None for zero.
B_4 = [
    [(1, "e", 2), None, None, None],
    [(1, "e", 2), (-1, "e", 3), None, None],
    [(1, "e", 2), (-1, "e", 3), (1, "e", 4), None],
    [(1, "e", 2), (-1, "e", 3), (1, "e", 4), (-1, "e", 5)],
]
B_INV_4 = [
    [(1, "h", 1), None, None, None],
    [(1, "h", 2), (-1, "h", 2), None, None],
    [(1, "h", 3), (-1, "h", 3), (1, "h", 3), None],
    [(1, "h", 4), (-1, "h", 4), (1, "h", 4), (-1, "h", 4)],
]

# Hasse edges at n = 4 drawn double-lined (generator containment), as labels.
MARKED_EDGES_4 = {
    ("4444", "3444"), ("3444", "3344"), ("2444", "2344"),
    ("3344", "3334"), ("3344", "2344"), ("1444", "1344"),
    ("2344", "2334"), ("3334", "2334"), ("1344", "1334"),
    ("2244", "1244"), ("2244", "2234"), ("2334", "2234"),
    ("1244", "1234"), ("1334", "1234"), ("2234", "1234"),
}
UNMARKED_EDGES_4 = {
    ("3444", "2444"), ("2444", "1444"), ("2344", "1344"),
    ("2344", "2244"), ("1344", "1244"), ("2334", "1334"),
}

CATALAN = {1: 1, 2: 2, 3: 5, 4: 14, 5: 42, 6: 132}
MAXIMAL_CHAINS = {1: 1, 2: 1, 3: 2, 4: 16, 5: 768, 6: 292864}

# Reduced lex Groebner basis of I_(3,3,3,4).
GB_3334 = ["x1 + x2 + x3", "x2^2 + x2*x3 + x3^2", "x3^3", "x4"]
