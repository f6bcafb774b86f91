"""Two worked tableaux with known dinv (4 and 2), as context plus tableau JSON."""

DINV4_CTX = (5, 1, 1)
DINV4 = {"n": 5, "inner": [3, 1], "sign": "+",
           "entries": [[0, 3, 3], [1, 1, 1], [2, 0, 2], [3, 0, 4], [4, 0, 5]]}

DINV2_CTX = (5, 0, 3)
DINV2 = {"n": 5, "inner": [2, 1], "sign": "+",
           "entries": [[0, 2, 4], [1, 1, 1], [2, 0, 2], [3, 0, 3], [4, 0, 5]]}
