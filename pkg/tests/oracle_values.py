"""Frozen reference values.

DERIVED values were computed outside the package (binomial series in plain
Fractions, character tables of small symmetric groups, divisor sums) and are
pinned here. TABLE values are transcribed from the published table.
"""

from fractions import Fraction as F

# coefficients of prod (1 - x^n)^(-1/2), x = q^2   [DERIVED]
Z_EMPTY_X = [F(1), F(1, 2), F(7, 8), F(17, 16), F(203, 128), F(455, 256), F(2723, 1024), F(6001, 2048)]

# prod (1 - q^n)^(-1): partition numbers   [DERIVED]
PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

# k! [z^k] 1/(e^{z/2}+e^{-z/2})   [DERIVED]
C_K = {0: F(1, 2), 1: F(0), 2: F(-1, 8), 3: F(0), 4: F(5, 32), 6: F(-61, 128), 8: F(1385, 512)}

# Eisenstein q-expansions, constant term zeta(1-w)/2 then sigma_{w-1}(n)   [DERIVED]
E2 = [F(-1, 24), 1, 3, 4, 7, 6, 12]
E4 = [F(1, 240), 1, 9, 28, 73, 126, 252]
E6_CONST = F(-1, 504)

# characters from the S_4 table   [DERIVED]
CHI_S4 = {((2, 2), (2, 2)): 2, ((3, 1), (2, 2)): -1, ((4,), (2, 2)): 1, ((2, 1, 1), (2, 2)): -1, ((3, 1), (2, 1, 1)): 1}

# shifted power sums   [DERIVED]
PBAR0 = {(): F(1, 2), (1,): F(-3, 2), (1, 1): F(1, 2), (2,): F(1, 2), (3, 2, 1): F(-7, 2)}
P1 = {(3, 1): F(95, 24)}

# generator counts per weight cap 2, 4, 6, 8, 10   [TABLE / DERIVED]
BASIS_SIZES = {2: 3, 4: 7, 6: 13, 8: 22, 10: 34}
LAMBDA_BAR_SIZES = {2: 5, 4: 20, 6: 65, 8: 185, 10: 481}
LAMBDA_STAR_SIZES = {2: 2, 4: 5, 6: 11, 8: 22, 10: 42}

# connected-inversion coefficients   [DERIVED]
DECOMP_2_3_M1_2 = F(3)
CHAIN_8_M1_12 = [F(1), F(-1), F(1, 2), F(-1, 6)]

# AEZ normalisation factors   [DERIVED]
AEZ_FACTOR = {"-1^4": F(384), "2,-1^2": F(64)}

# torus covers of degree d: all = p(d), connected = sigma_1(d)/d   [DERIVED]
TORUS_CONNECTED = {1: F(1), 2: F(3, 2), 3: F(4, 3), 4: F(7, 4), 5: F(6, 5)}

# published volumes (AEZ convention): orders -> (coefficient, pi power)   [TABLE]
TABLE_W4 = {
    "-1^4": (F(2), 2),
    "2,-1^2": (F(4, 3), 2),
    "1,-1^5": (F(1), 4),
    "1^2,-1^2": (F(1, 3), 4),
    "3,-1^3": (F(5, 9), 4),
    "5,-1": (F(28, 135), 4),
}
TABLE_W6 = {
    "2^2": (F(2, 3), 2),
    "2,-1^6": (F(8, 3), 4),
    "2,1,-1^3": (F(1), 4),
    "2,1^2": (F(2, 15), 4),
    "3,2,-1": (F(10, 27), 4),
    "4,-1^4": (F(2), 4),
    "4,1,-1": (F(8, 15), 4),
    "6,-1^2": (F(184, 135), 4),
    "8": (F(10, 27), 4),
    "1^2,-1^6": (F(1, 2), 6),
    "1^3,-1^3": (F(11, 60), 6),
    "1^4": (F(1, 15), 6),
    "3,-1^7": (F(3, 4), 6),
    "3,1,-1^4": (F(1, 3), 6),
    "3,1^2,-1": (F(1, 9), 6),
    "3^2,-1^2": (F(53, 270), 6),
    "5,-1^5": (F(7, 10), 6),
    "5,1,-1^2": (F(7, 30), 6),
    "5,3": (F(14, 243), 6),
    "7,-1^3": (F(27, 50), 6),
    "7,1": (F(18, 175), 6),
    "9,-1": (F(15224, 42525), 6),
}
TABLE_W8_SAMPLE = {"4^2": (F(4, 5), 4)}

# closed forms   [TABLE]
HYPERELLIPTIC = {("1", 1, -1): (F(1, 3), 4), ("2", -1, 0): (F(4, 3), 2), ("3", 0, 0): (F(4, 3), 2)}
