"""Published reference values, transcribed by hand.

Rows and columns of every matrix follow descending lexicographic order.
"""

WORKED_SIGMA = (2, 7, 1, 5, 6, 4, 3)
WORKED_P = "3:7 4:6 5 1:2"
WORKED_Q = "2:7 5:6 4 1:3"

# growth diagram of WORKED_SIGMA, rows from top to bottom
GROWTH_ROWS = [
    "e 1 11 21 22 212 2112 2212",
    "e 1 1 2 12 112 212 222",
    "e 1 1 2 12 12 22 212",
    "e 1 1 2 2 2 12 22",
    "e 1 1 2 2 2 2 12",
    "e 1 1 2 2 2 2 2",
    "e e e 1 1 1 1 1",
    "e e e e e e e e",
]
P_HAT = "e,1,2,12,22,212,222,2212"
Q_HAT = "e,1,11,21,22,212,2112,2212"

# evacuation of WORKED_P: (letter, remaining tableau, freed cell as (column, row))
EVACUATION_STEPS = [
    (7, "3:6 4:5 1:2", (2, 0)),
    (6, "3:5 4 1:2", (1, 1)),
    (5, "3:4 1:2", (1, 0)),
    (4, "3 1:2", (0, 1)),
    (3, "1:2", (0, 0)),
    (2, "1", (3, 1)),
    (1, "e", (3, 0)),
]
EVACUATED = "3:4 5:6 7 1:2"

CONVERSION_CHAIN = "e,1,2,12,22,221,2211,21211"
CONVERSION_TABLEAU = "3:7 6 1:5 4 2"

# Young-Fibonacci numbers N[u][v] for n = 6, as printed
N6_ORDER = ["222", "2211", "2121", "2112", "21111", "1221", "1212", "12111",
            "1122", "11211", "11121", "11112", "111111"]
N6_PRINTED = [
    [2, 3, 4, 5, 6, 4, 5, 6, 5, 7, 8, 12, 15],
    [4, 5, 5, 7, 9, 5, 7, 9, 7, 9, 9, 12, 15],
    [2, 3, 4, 4, 5, 4, 4, 5, 4, 6, 8, 8, 10],
    [1, 1, 1, 1, 1, 2, 2, 3, 3, 4, 4, 4, 5],
    [2, 3, 3, 3, 4, 3, 3, 4, 3, 4, 4, 4, 5],
    [2, 2, 3, 4, 4, 3, 4, 4, 4, 4, 6, 8, 8],
    [1, 1, 1, 1, 1, 1, 2, 2, 3, 3, 3, 4, 4],
    [2, 2, 2, 3, 3, 2, 3, 3, 3, 3, 3, 4, 4],
    [1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 3, 3, 3],
    [1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3],
    [1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2],
    [0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
]
# the one printed cell that every independent count contradicts
N6_ERRATUM = ("222", "11121", 8, 9)

OKADA5_ORDER = ["221", "212", "2111", "122", "1211", "1121", "1112", "11111"]
OKADA5 = [
    [1, 1, 2, 1, 2, 3, 4, 8],
    [0, 1, 1, 1, 1, 1, 3, 4],
    [0, 0, 1, 0, 1, 1, 1, 4],
    [0, 0, 0, 1, 1, 1, 2, 3],
    [0, 0, 0, 0, 1, 1, 1, 3],
    [0, 0, 0, 0, 0, 1, 1, 2],
    [0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 1],
]

KOSTKA5_ORDER = ["5", "41", "32", "311", "221", "2111", "11111"]
KOSTKA5 = [
    [1, 1, 1, 1, 1, 1, 1],
    [0, 1, 1, 2, 2, 3, 4],
    [0, 0, 1, 1, 2, 3, 5],
    [0, 0, 0, 1, 1, 3, 6],
    [0, 0, 0, 0, 1, 2, 5],
    [0, 0, 0, 0, 0, 1, 4],
    [0, 0, 0, 0, 0, 0, 1],
]

# the four semistandard tableaux of shape 221 and content 1211
SSYT_221_1211 = {"1:4 2:3 2", "2:4 1:3 2", "2:4 2:3 1", "3:4 1:2 2"}

# weak order on YF tableaux of size 5: elements per rank
YFT5_RANK_SIZES = [1, 4, 6, 6, 5, 3, 1]
YFT5_TOP = "1:5 2:4 3"
