"""Frozen reference values for the regression checks.

REFERENCE_BEST_APPROX holds the expected smallest-denominator approximations
of the four supported constants for radii 10^-1 .. 10^-15; every cell has
been cross-checked against the independent interval oracle in this package.
REFERENCE_QUERY_COUNTS holds the recorded query counts for the same runs;
REFERENCE_SEARCH_STATS holds recorded search-benchmark statistics. Timing
columns are hardware-specific and deliberately not recorded here.
"""

APPROX_TARGETS = ("pi", "e", "sqrt:2", "sqrt:5")

# rows: radius exponent i (delta = 10^-i); columns follow APPROX_TARGETS
REFERENCE_BEST_APPROX = {
    1: ("16/5", "8/3", "3/2", "7/3"),
    2: ("22/7", "19/7", "17/12", "29/13"),
    3: ("201/64", "87/32", "41/29", "38/17"),
    4: ("333/106", "193/71", "99/70", "161/72"),
    5: ("355/113", "1071/394", "577/408", "682/305"),
    6: ("355/113", "2721/1001", "1393/985", "2207/987"),
    7: ("75948/24175", "15062/5541", "3363/2378", "9349/4181"),
    8: ("100798/32085", "23225/8544", "19601/13860", "12238/5473"),
    9: ("103993/33102", "49171/18089", "47321/33461", "51841/23184"),
    10: ("312689/99532", "419314/154257", "114243/80782", "219602/98209"),
    11: ("833719/265381", "1084483/398959", "275807/195025", "710647/317811"),
    12: ("4272943/1360120", "1084483/398959", "1607521/1136689", "3010349/1346269"),
    13: ("5419351/1725033", "12496140/4597073", "3880899/2744210", "3940598/1762289"),
    14: ("58466453/18610450", "28245729/10391023", "9369319/6625109", "16692641/7465176"),
    15: ("80143857/25510582", "28245729/10391023", "54608393/38613965", "70711162/31622993"),
}

REFERENCE_QUERY_COUNTS = {
    1: (14, 12, 6, 11),
    2: (11, 13, 10, 16),
    3: (24, 17, 13, 16),
    4: (24, 17, 14, 17),
    5: (19, 26, 18, 24),
    6: (19, 27, 21, 27),
    7: (47, 34, 22, 32),
    8: (47, 34, 26, 32),
    9: (47, 33, 29, 33),
    10: (39, 45, 30, 40),
    11: (46, 45, 33, 43),
    12: (50, 45, 37, 48),
    13: (47, 54, 38, 48),
    14: (60, 54, 41, 49),
    15: (60, 63, 45, 56),
}

# recorded search-benchmark statistics by n:
# (km max queries, km avg queries, csb max queries, csb avg queries)
REFERENCE_SEARCH_STATS = {
    10**1: (8, 5.5, 7, 3.5),
    10**2: (15, 13.2, 15, 8.5),
    10**3: (21, 20.7, 23, 15.1),
    10**4: (28, 27.6, 29, 21.8),
    10**5: (35, 34.3, 38, 28.5),
    10**6: (41, 40.9, 44, 35.5),
}
