"""Published Legendre pair solutions used as regression fixtures.

Index sets list orbit representatives of the +1 positions (lengths 117, 129,
147) or rank encodings (lengths 117, 133, 147).  For length 133 the ranks
address 22-subsets of the 44 size-3 orbits and mark the -1 positions.
"""

SUBGROUP_117 = (1, 16, 22)
COMPOSITION_117 = "2x1+19x3"

PAIRS_117 = [
    ({1, 3, 4, 7, 8, 13, 14, 17, 19, 24, 28, 29, 36, 39, 40, 47, 51, 56, 63, 78, 95},
     {2, 5, 7, 9, 13, 14, 18, 19, 20, 24, 34, 36, 39, 40, 42, 47, 56, 58, 73, 78, 79}),
    ({1, 4, 8, 10, 12, 18, 20, 29, 34, 35, 36, 39, 40, 47, 56, 57, 58, 63, 73, 78, 95},
     {3, 5, 6, 7, 8, 9, 10, 12, 13, 14, 18, 19, 20, 26, 28, 39, 40, 41, 47, 56, 78}),
    ({1, 2, 4, 6, 7, 8, 10, 14, 18, 29, 34, 36, 39, 47, 51, 56, 63, 73, 78, 79, 95},
     {2, 3, 5, 7, 10, 12, 13, 14, 20, 24, 26, 28, 34, 36, 39, 40, 41, 47, 56, 63, 78}),
    ({2, 3, 6, 7, 9, 19, 21, 26, 29, 34, 39, 40, 41, 47, 56, 58, 63, 73, 78, 79, 95},
     {1, 2, 3, 4, 5, 14, 17, 18, 25, 26, 29, 35, 36, 39, 40, 56, 57, 58, 63, 73, 78}),
    ({2, 3, 9, 10, 17, 18, 19, 20, 25, 34, 36, 39, 41, 47, 56, 57, 58, 73, 78, 79, 95},
     {1, 2, 4, 8, 9, 13, 14, 17, 21, 26, 29, 39, 40, 42, 56, 57, 58, 63, 73, 78, 95}),
    ({1, 2, 4, 5, 6, 8, 13, 17, 18, 19, 21, 34, 36, 39, 40, 41, 47, 51, 56, 73, 78},
     {2, 4, 7, 8, 9, 10, 13, 18, 24, 25, 29, 35, 39, 40, 51, 56, 63, 73, 78, 79, 95}),
    ({2, 5, 6, 7, 8, 10, 13, 17, 18, 20, 21, 36, 39, 40, 41, 51, 58, 73, 78, 79, 95},
     {3, 4, 5, 7, 10, 14, 17, 18, 26, 28, 29, 35, 36, 39, 40, 41, 57, 63, 78, 79, 95}),
    ({3, 4, 5, 7, 8, 18, 21, 24, 25, 28, 29, 34, 39, 40, 41, 42, 47, 56, 73, 78, 95},
     {3, 9, 14, 17, 19, 21, 25, 28, 29, 34, 35, 39, 40, 47, 51, 57, 58, 73, 78, 79, 95}),
    ({1, 2, 4, 6, 7, 9, 10, 12, 13, 14, 18, 28, 29, 34, 35, 39, 41, 42, 56, 78, 95},
     {5, 6, 8, 9, 10, 13, 14, 19, 20, 25, 28, 34, 36, 39, 41, 51, 56, 58, 63, 73, 78}),
    ({1, 2, 5, 7, 8, 9, 19, 20, 24, 29, 35, 36, 39, 40, 51, 58, 63, 73, 78, 79, 95},
     {5, 7, 9, 10, 13, 14, 17, 20, 21, 26, 28, 35, 39, 40, 42, 56, 57, 63, 78, 79, 95}),
]

RANKS_117 = [
    (10327421105, 25363140085),
    (15300082821, 29082145926),
    (5172847060, 20669267508),
    (21265971921, 810444739),
    (22124932714, 6023154169),
    (4370665803, 24003646556),
    (24634133277, 27568254144),
    (27457918899, 31248697558),
    (5218049000, 33814036464),
    (6896605532, 34222709639),
]

SUBSET_117_RANK = 10327421105
SUBSET_117 = (1, 3, 4, 7, 8, 12, 13, 14, 16, 19, 22, 23, 26, 27, 30, 31, 32, 35, 38)

SUBGROUP_129 = (1, 49, 79)
COMPOSITION_129 = "2x1+21x3"

PAIRS_129 = [
    ({1, 2, 5, 13, 17, 19, 21, 22, 25, 26, 27, 34, 39, 43, 50, 55, 60, 62, 63, 68, 73, 78, 86},
     {1, 3, 11, 12, 13, 17, 21, 26, 31, 34, 35, 42, 43, 47, 50, 52, 57, 60, 62, 68, 70, 78, 86}),
    ({1, 2, 5, 13, 17, 19, 21, 22, 25, 26, 27, 34, 39, 43, 50, 55, 60, 62, 63, 68, 73, 78, 86},
     {1, 2, 3, 4, 5, 6, 10, 11, 12, 17, 19, 20, 21, 22, 27, 30, 34, 43, 50, 57, 70, 73, 86}),
]

SUBGROUP_147 = (1, 67, 79)
COMPOSITION_147 = "2x1+24x3"

PAIR_147_INDEX_SETS = (
    {1, 2, 3, 5, 7, 8, 10, 14, 16, 17, 19, 21, 27, 35, 38, 39, 49, 52, 57, 61, 70, 72, 74, 83, 87, 98},
    {1, 2, 6, 7, 9, 10, 12, 16, 17, 19, 23, 24, 26, 35, 39, 46, 48, 49, 50, 59, 65, 68, 70, 78, 85, 98},
)
PAIR_147_RANKS = (2279447240326, 6981583007090)

RANKS_147_LOW_HIGH = [
    (1685512212865, 3612702197526),
    (2926263388957, 265692014998),
    (4357037511235, 3728601853735),
]

SUBGROUP_133 = (1, 11, 121)
COMPOSITION_133 = "22x3"

RANKS_133 = [
    (128572618842, 210086022915),
    (17644506807, 41167368128),
    (179364459458, 27235734754),
    (213277890206, 251235525902),
    (272147218211, 279717372516),
]

# PSD values at lags 19/38/57 for the five length-133 pairs, in rank order
PSD_19_133 = [(176, 92), (92, 176), (36, 232), (92, 176), (92, 176)]

SUBGROUP_87_ORDER_7 = (1, 7, 16, 25, 49, 52, 82)
SUBGROUPS_87_ORDER_4 = [(1, 17, 28, 41), (1, 28, 46, 70)]
SUBGROUPS_87_ORDER_2 = [(1, 28), (1, 59), (1, 86)]
